#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzyforest {

// Provenance of one encoded column.
struct ColumnMeta {
    std::string name;      // generated column name, e.g. "party=dem" or "age"
    std::string source;    // original variable
    std::string category;  // level label, or "numeric" for pass-through columns
};

// Column-major numeric design matrix with optional binary labels and
// per-row observation weights. Encoded categorical columns are 0/1.
struct FeatureMatrix {
    std::vector<std::vector<double>> columns;
    std::vector<ColumnMeta> meta;
    std::vector<int> labels;      // empty, or one 0/1 label per row
    std::vector<double> weights;  // empty (uniform), or one weight >= 0 per row

    std::size_t n_rows() const { return columns.empty() ? 0 : columns[0].size(); }
    std::size_t n_cols() const { return columns.size(); }

    bool has_labels() const { return !labels.empty(); }
    bool has_weights() const { return !weights.empty(); }

    int find_column(const std::string& name) const {
        for (std::size_t j = 0; j < meta.size(); ++j)
            if (meta[j].name == name) return static_cast<int>(j);
        return -1;
    }

    void validate() const {
        const std::size_t n = n_rows();
        for (const auto& col : columns) {
            if (col.size() != n) throw std::invalid_argument("FeatureMatrix: ragged columns");
        }
        if (meta.size() != columns.size()) {
            throw std::invalid_argument("FeatureMatrix: meta/column count mismatch");
        }
        if (!labels.empty()) {
            if (labels.size() != n) throw std::invalid_argument("FeatureMatrix: label count mismatch");
            for (int y : labels) {
                if (y != 0 && y != 1) throw std::invalid_argument("FeatureMatrix: labels must be 0/1");
            }
        }
        if (!weights.empty()) {
            if (weights.size() != n) throw std::invalid_argument("FeatureMatrix: weight count mismatch");
            bool any_positive = false;
            for (double w : weights) {
                if (w < 0.0) throw std::invalid_argument("FeatureMatrix: negative weight");
                if (w > 0.0) any_positive = true;
            }
            if (!any_positive) throw std::invalid_argument("FeatureMatrix: all weights zero");
        }
    }

    // Row view across a subset of columns is not needed often enough to
    // justify row storage; callers index columns directly.
    std::vector<double> row(std::size_t r) const {
        std::vector<double> out(n_cols());
        for (std::size_t j = 0; j < n_cols(); ++j) out[j] = columns[j][r];
        return out;
    }
};

}  // namespace fuzzyforest
