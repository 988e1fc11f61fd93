#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzzyforest/detail/format.hpp"
#include "fuzzyforest/detail/linalg.hpp"
#include "fuzzyforest/raw_table.hpp"
#include "fuzzyforest/rng.hpp"

namespace fuzzyforest {

// Which complete columns drive the predictive mean of an incomplete column.
enum class CovariatePolicy {
    // originally complete columns plus columns imputed earlier in the pass
    AllComplete,
    // only columns that had no missing cells in the input
    OriginallyComplete,
};

struct ImputeConfig {
    std::size_t donor_pool_size = 5;
    std::uint64_t rng_seed = 0;
    CovariatePolicy covariate_policy = CovariatePolicy::AllComplete;
};

namespace impute_detail {

// Categorical cells are temporarily integer-coded (levels in first-appearance
// order) so they can enter the linear predictor; numeric cells parse directly.
inline std::vector<double> coded_values(const RawColumn& col) {
    std::vector<double> out(col.cells.size(), std::nan(""));
    if (col.kind == ColumnKind::Numeric) {
        for (std::size_t r = 0; r < col.cells.size(); ++r) {
            if (!col.cells[r]) continue;
            double v;
            if (!detail::parse_double(*col.cells[r], v)) {
                throw std::runtime_error("impute_pmm: non-numeric cell '" + *col.cells[r] +
                                         "' in numeric column " + col.name);
            }
            out[r] = v;
        }
        return out;
    }
    std::unordered_map<std::string, double> codes;
    for (std::size_t r = 0; r < col.cells.size(); ++r) {
        if (!col.cells[r]) continue;
        auto it = codes.find(*col.cells[r]);
        if (it == codes.end()) {
            it = codes.emplace(*col.cells[r], static_cast<double>(codes.size())).first;
        }
        out[r] = it->second;
    }
    return out;
}

}  // namespace impute_detail

// Predictive mean matching hotdeck. For each incomplete column, in increasing
// missingness order: fit a least-squares linear predictor of the column on the
// currently complete covariates, rank observed rows by |predicted mean
// difference| against each missing row, and copy the value of one of the
// donor_pool_size nearest donors chosen uniformly at random. Every imputed
// cell is therefore an observed value of its own column.
inline RawTable impute_pmm(const RawTable& table, const ImputeConfig& config = {}) {
    if (config.donor_pool_size < 1) {
        throw std::invalid_argument("impute_pmm: donor_pool_size must be >= 1");
    }
    const std::size_t n = table.n_rows();
    const std::size_t p = table.n_cols();

    for (const auto& col : table.columns) {
        const std::size_t observed = n - col.missing_count();
        if (observed == 0) {
            throw std::runtime_error("impute_pmm: column entirely missing: " + col.name);
        }
        if (col.missing_count() > 0 && observed < config.donor_pool_size) {
            throw std::runtime_error("impute_pmm: column " + col.name + " has only " +
                                     std::to_string(observed) + " observed values, donor pool of " +
                                     std::to_string(config.donor_pool_size) + " unsatisfiable");
        }
    }

    RawTable result = table;
    if (table.complete()) return result;  // no-op, byte identical

    std::vector<bool> originally_complete(p);
    std::vector<std::size_t> incomplete;
    for (std::size_t j = 0; j < p; ++j) {
        originally_complete[j] = table.columns[j].missing_count() == 0;
        if (!originally_complete[j]) incomplete.push_back(j);
    }
    // increasing missingness, ties by column index
    std::stable_sort(incomplete.begin(), incomplete.end(), [&](std::size_t a, std::size_t b) {
        return table.columns[a].missing_count() < table.columns[b].missing_count();
    });

    std::vector<bool> complete_now = originally_complete;

    for (std::size_t target : incomplete) {
        RawColumn& col = result.columns[target];
        std::vector<double> y = impute_detail::coded_values(col);

        std::vector<std::size_t> covariates;
        for (std::size_t j = 0; j < p; ++j) {
            if (j == target) continue;
            bool usable = config.covariate_policy == CovariatePolicy::AllComplete
                              ? complete_now[j]
                              : originally_complete[j];
            if (usable) covariates.push_back(j);
        }

        // design matrix over all rows: intercept + coded covariates
        const std::size_t k = covariates.size() + 1;
        std::vector<double> design(n * k, 1.0);
        for (std::size_t c = 0; c < covariates.size(); ++c) {
            std::vector<double> coded = impute_detail::coded_values(result.columns[covariates[c]]);
            for (std::size_t r = 0; r < n; ++r) design[r * k + 1 + c] = coded[r];
        }

        std::vector<std::size_t> observed_rows, missing_rows;
        for (std::size_t r = 0; r < n; ++r) {
            if (col.cells[r]) observed_rows.push_back(r);
            else missing_rows.push_back(r);
        }

        std::vector<double> x_obs(observed_rows.size() * k);
        std::vector<double> y_obs(observed_rows.size());
        for (std::size_t i = 0; i < observed_rows.size(); ++i) {
            std::copy_n(&design[observed_rows[i] * k], k, &x_obs[i * k]);
            y_obs[i] = y[observed_rows[i]];
        }
        std::vector<double> beta = detail::least_squares(
            x_obs, y_obs, observed_rows.size(), k, 1e-8 * static_cast<double>(observed_rows.size()));

        std::vector<double> predicted(n);
        for (std::size_t r = 0; r < n; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < k; ++c) s += design[r * k + c] * beta[c];
            predicted[r] = s;
        }

        Rng rng(derive_seed(config.rng_seed, {stream::kImpute, target}));
        std::vector<std::pair<double, std::size_t>> ranked(observed_rows.size());
        for (std::size_t miss : missing_rows) {
            for (std::size_t i = 0; i < observed_rows.size(); ++i) {
                ranked[i] = {std::fabs(predicted[miss] - predicted[observed_rows[i]]), observed_rows[i]};
            }
            std::size_t pool = std::min(config.donor_pool_size, ranked.size());
            std::partial_sort(ranked.begin(), ranked.begin() + pool, ranked.end());
            std::size_t donor = ranked[rng.uniform_index(pool)].second;
            col.cells[miss] = *col.cells[donor];
        }
        complete_now[target] = true;
    }
    return result;
}

}  // namespace fuzzyforest
