#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzyforest/csv.hpp"
#include "fuzzyforest/detail/format.hpp"

namespace fuzzyforest {

enum class ColumnKind { Categorical, Numeric };

// One survey variable: name, inferred or hinted kind, and cells where
// nullopt marks a missing observation.
struct RawColumn {
    std::string name;
    ColumnKind kind = ColumnKind::Categorical;
    std::vector<std::optional<std::string>> cells;

    std::size_t missing_count() const {
        std::size_t m = 0;
        for (const auto& c : cells)
            if (!c.has_value()) ++m;
        return m;
    }
};

struct RawTable {
    std::vector<RawColumn> columns;

    std::size_t n_rows() const { return columns.empty() ? 0 : columns[0].cells.size(); }
    std::size_t n_cols() const { return columns.size(); }

    const RawColumn* find(const std::string& name) const {
        for (const auto& c : columns)
            if (c.name == name) return &c;
        return nullptr;
    }

    int find_index(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i].name == name) return static_cast<int>(i);
        return -1;
    }

    bool complete() const {
        for (const auto& c : columns)
            if (c.missing_count() > 0) return false;
        return true;
    }
};

struct LoadOptions {
    // Cells equal to any sentinel become MISSING. Defaults per contract.
    std::vector<std::string> missing_sentinels = {"", "NA"};
    // Optional per-column kind hints; unhinted columns are inferred:
    // numeric iff at least one observed cell and all observed cells parse.
    std::map<std::string, ColumnKind> schema;
};

inline RawTable table_from_csv(const CsvDocument& doc, const LoadOptions& opts = {}) {
    std::set<std::string> seen;
    for (const auto& name : doc.header) {
        if (!seen.insert(name).second) {
            throw std::runtime_error("load_csv: duplicate header name: " + name);
        }
    }

    RawTable table;
    table.columns.resize(doc.header.size());
    for (std::size_t j = 0; j < doc.header.size(); ++j) {
        table.columns[j].name = doc.header[j];
        table.columns[j].cells.reserve(doc.rows.size());
    }

    auto is_missing = [&](const std::string& cell) {
        return std::find(opts.missing_sentinels.begin(), opts.missing_sentinels.end(), cell) !=
               opts.missing_sentinels.end();
    };

    for (const auto& row : doc.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (is_missing(row[j])) {
                table.columns[j].cells.push_back(std::nullopt);
            } else {
                table.columns[j].cells.push_back(row[j]);
            }
        }
    }

    for (auto& col : table.columns) {
        auto hint = opts.schema.find(col.name);
        if (hint != opts.schema.end()) {
            col.kind = hint->second;
            continue;
        }
        std::size_t observed = 0;
        bool all_numeric = true;
        for (const auto& cell : col.cells) {
            if (!cell) continue;
            ++observed;
            double v;
            if (!detail::parse_double(*cell, v)) {
                all_numeric = false;
                break;
            }
        }
        col.kind = (observed > 0 && all_numeric) ? ColumnKind::Numeric : ColumnKind::Categorical;
    }
    return table;
}

inline RawTable load_csv(const std::string& path, const LoadOptions& opts = {}) {
    return table_from_csv(read_csv_file(path), opts);
}

struct MissingnessReport {
    std::vector<std::string> column_names;
    std::vector<double> column_fractions;
    double overall_fraction = 0.0;
    std::size_t missing_cells = 0;
    std::size_t total_cells = 0;
};

inline MissingnessReport missingness_report(const RawTable& table) {
    MissingnessReport rep;
    const std::size_t n = table.n_rows();
    for (const auto& col : table.columns) {
        std::size_t m = col.missing_count();
        rep.column_names.push_back(col.name);
        rep.column_fractions.push_back(n == 0 ? 0.0 : static_cast<double>(m) / static_cast<double>(n));
        rep.missing_cells += m;
    }
    rep.total_cells = n * table.n_cols();
    rep.overall_fraction = rep.total_cells == 0
                               ? 0.0
                               : static_cast<double>(rep.missing_cells) / static_cast<double>(rep.total_cells);
    return rep;
}

}  // namespace fuzzyforest
