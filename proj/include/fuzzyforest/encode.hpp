#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzyforest/detail/format.hpp"
#include "fuzzyforest/feature_matrix.hpp"
#include "fuzzyforest/raw_table.hpp"

namespace fuzzyforest {

// Expands each categorical variable with c observed levels into c indicator
// columns named "<var>=<level>"; numeric columns pass through. Requires a
// complete table (impute first). Column order follows the source variable
// order, levels in first-appearance order.
inline FeatureMatrix one_hot_encode(const RawTable& table) {
    const std::size_t n = table.n_rows();
    FeatureMatrix out;

    for (const auto& col : table.columns) {
        for (std::size_t r = 0; r < n; ++r) {
            if (!col.cells[r]) {
                throw std::runtime_error("one_hot_encode: MISSING cell in column " + col.name +
                                         " row " + std::to_string(r) + "; impute first");
            }
        }
        if (col.kind == ColumnKind::Numeric) {
            std::vector<double> values(n);
            for (std::size_t r = 0; r < n; ++r) {
                double v;
                if (!detail::parse_double(*col.cells[r], v)) {
                    throw std::runtime_error("one_hot_encode: non-numeric cell '" + *col.cells[r] +
                                             "' in numeric column " + col.name);
                }
                values[r] = v;
            }
            out.columns.push_back(std::move(values));
            out.meta.push_back({col.name, col.name, "numeric"});
            continue;
        }

        std::vector<std::string> levels;  // first-appearance order
        std::vector<std::size_t> level_of_row(n);
        for (std::size_t r = 0; r < n; ++r) {
            const std::string& v = *col.cells[r];
            auto it = std::find(levels.begin(), levels.end(), v);
            if (it == levels.end()) {
                level_of_row[r] = levels.size();
                levels.push_back(v);
            } else {
                level_of_row[r] = static_cast<std::size_t>(it - levels.begin());
            }
        }
        std::size_t base = out.columns.size();
        for (const auto& level : levels) {
            out.columns.emplace_back(n, 0.0);
            out.meta.push_back({col.name + "=" + level, col.name, level});
        }
        for (std::size_t r = 0; r < n; ++r) {
            out.columns[base + level_of_row[r]][r] = 1.0;
        }
    }
    return out;
}

// Collapses indicator groups by argmax back to a categorical table. Numeric
// pass-through columns are re-rendered with shortest round-trip formatting.
inline RawTable decode_one_hot(const FeatureMatrix& matrix) {
    const std::size_t n = matrix.n_rows();
    RawTable table;
    std::size_t j = 0;
    while (j < matrix.n_cols()) {
        if (matrix.meta[j].category == "numeric") {
            RawColumn col;
            col.name = matrix.meta[j].source;
            col.kind = ColumnKind::Numeric;
            col.cells.reserve(n);
            for (std::size_t r = 0; r < n; ++r) col.cells.emplace_back(detail::format_double(matrix.columns[j][r]));
            table.columns.push_back(std::move(col));
            ++j;
            continue;
        }
        const std::string& source = matrix.meta[j].source;
        std::size_t end = j;
        while (end < matrix.n_cols() && matrix.meta[end].source == source &&
               matrix.meta[end].category != "numeric") {
            ++end;
        }
        RawColumn col;
        col.name = source;
        col.kind = ColumnKind::Categorical;
        col.cells.reserve(n);
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t best = j;
            for (std::size_t c = j + 1; c < end; ++c) {
                if (matrix.columns[c][r] > matrix.columns[best][r]) best = c;
            }
            col.cells.emplace_back(matrix.meta[best].category);
        }
        table.columns.push_back(std::move(col));
        j = end;
    }
    return table;
}

// Full encoded dataset: matrix plus label/weight provenance.
struct EncodedDataset {
    FeatureMatrix matrix;
    std::string label_column;
    std::vector<std::string> label_levels;  // level mapped to class 0, then class 1
    std::string weight_column;
};

// Extracts the binary label and optional weight column from a complete table,
// one-hot encodes the rest. If both label levels parse as numbers the classes
// follow numeric order (so 0/1 files map as written); otherwise
// first-appearance order decides.
inline EncodedDataset build_feature_matrix(const RawTable& table, const std::string& label_column,
                                           const std::string& weight_column = "") {
    const RawColumn* label_col = table.find(label_column);
    if (!label_col) throw std::runtime_error("label column not found: " + label_column);
    const RawColumn* weight_col = nullptr;
    if (!weight_column.empty()) {
        weight_col = table.find(weight_column);
        if (!weight_col) throw std::runtime_error("weight column not found: " + weight_column);
    }

    const std::size_t n = table.n_rows();
    std::vector<std::string> levels;
    for (std::size_t r = 0; r < n; ++r) {
        if (!label_col->cells[r]) throw std::runtime_error("label column has MISSING cells; impute first");
        const std::string& v = *label_col->cells[r];
        if (std::find(levels.begin(), levels.end(), v) == levels.end()) levels.push_back(v);
    }
    if (levels.size() != 2) {
        throw std::runtime_error("label column " + label_column + " must have exactly 2 levels, found " +
                                 std::to_string(levels.size()));
    }
    double a, b;
    if (detail::parse_double(levels[0], a) && detail::parse_double(levels[1], b) && b < a) {
        std::swap(levels[0], levels[1]);
    }

    RawTable features;
    for (const auto& col : table.columns) {
        if (col.name == label_column || (weight_col && col.name == weight_column)) continue;
        features.columns.push_back(col);
    }

    EncodedDataset out;
    out.matrix = one_hot_encode(features);
    out.label_column = label_column;
    out.label_levels = levels;
    out.weight_column = weight_column;

    out.matrix.labels.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        out.matrix.labels[r] = (*label_col->cells[r] == levels[1]) ? 1 : 0;
    }
    if (weight_col) {
        out.matrix.weights.resize(n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!weight_col->cells[r]) throw std::runtime_error("weight column has MISSING cells; impute first");
            double w;
            if (!detail::parse_double(*weight_col->cells[r], w)) {
                throw std::runtime_error("weight column cell is not numeric: " + *weight_col->cells[r]);
            }
            out.matrix.weights[r] = w;
        }
    }
    out.matrix.validate();
    return out;
}

}  // namespace fuzzyforest
