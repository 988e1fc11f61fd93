#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzyforest/detail/format.hpp"
#include "fuzzyforest/feature_matrix.hpp"
#include "fuzzyforest/raw_table.hpp"
#include "fuzzyforest/rng.hpp"

namespace fuzzyforest {

// Desk-scale benchmark generator: blocks of equicorrelated features with a
// planted signal. Feature j in block b is sqrt(rho)*g_b + sqrt(1-rho)*eps,
// so every within-block pair has population correlation exactly rho.
struct SynthConfig {
    std::size_t n_samples = 2000;
    std::vector<std::size_t> block_sizes = {20, 20, 20};
    double within_block_correlation = 0.7;
    // per-block count of informative features (the first ones in each block)
    std::vector<std::size_t> informative_per_block = {2, 2, 2};
    // scales the planted signal against the unit-variance nuisance term in the
    // label score; may be infinity for a noiseless threshold label
    double signal_strength = 2.0;
    double label_noise = 0.0;  // post-threshold flip probability
    bool binary_features = false;
    std::uint64_t rng_seed = 0;

    void validate() const {
        if (n_samples < 1) throw std::invalid_argument("synth: n_samples must be >= 1");
        if (block_sizes.empty()) throw std::invalid_argument("synth: need at least one block");
        for (std::size_t s : block_sizes) {
            if (s < 1) throw std::invalid_argument("synth: block sizes must be >= 1");
        }
        double rho = within_block_correlation;
        if (!(rho >= 0.0 && rho < 1.0)) throw std::invalid_argument("synth: rho must be in [0, 1)");
        if (!(label_noise >= 0.0 && label_noise < 0.5)) {
            throw std::invalid_argument("synth: label noise rate must be in [0, 0.5)");
        }
        if (!informative_per_block.empty() && informative_per_block.size() != block_sizes.size()) {
            throw std::invalid_argument("synth: informative_per_block size mismatch");
        }
        for (std::size_t b = 0; b < informative_per_block.size(); ++b) {
            if (informative_per_block[b] > block_sizes[b]) {
                throw std::invalid_argument("synth: more informative features than block size");
            }
        }
        if (std::isnan(signal_strength) || signal_strength < 0.0) {
            throw std::invalid_argument("synth: signal strength must be >= 0");
        }
    }
};

struct SyntheticData {
    FeatureMatrix matrix;                         // labeled
    std::vector<int> block_of_column;             // planted block per column
    std::vector<std::size_t> informative_columns; // ground-truth signal columns
};

inline SyntheticData generate_synthetic(const SynthConfig& config) {
    config.validate();
    const std::size_t n = config.n_samples;
    const double rho = config.within_block_correlation;
    const double factor_w = std::sqrt(rho);
    const double noise_w = std::sqrt(1.0 - rho);

    Rng rng(derive_seed(config.rng_seed, {stream::kSynth}));
    SyntheticData out;

    for (std::size_t b = 0; b < config.block_sizes.size(); ++b) {
        std::vector<double> factor(n);
        for (std::size_t i = 0; i < n; ++i) factor[i] = rng.normal();

        std::size_t informative = config.informative_per_block.empty() ? 0 : config.informative_per_block[b];
        for (std::size_t j = 0; j < config.block_sizes[b]; ++j) {
            std::vector<double> col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = factor_w * factor[i] + noise_w * rng.normal();
            std::string name = "b" + std::to_string(b) + "_f" + std::to_string(j);
            if (j < informative) out.informative_columns.push_back(out.matrix.columns.size());
            out.block_of_column.push_back(static_cast<int>(b));
            out.matrix.columns.push_back(std::move(col));
            out.matrix.meta.push_back({name, name, "numeric"});
        }
    }

    if (config.binary_features) {
        for (auto& col : out.matrix.columns) {
            for (double& v : col) v = v > 0.0 ? 1.0 : 0.0;
        }
    }

    // label = threshold of signal*sum(informative)/sqrt(m) + standard normal,
    // then flipped with the label noise rate
    out.matrix.labels.resize(n);
    const std::size_t m = out.informative_columns.size();
    const double norm = m > 0 ? 1.0 / std::sqrt(static_cast<double>(m)) : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t c : out.informative_columns) {
            double v = out.matrix.columns[c][i];
            sum += config.binary_features ? 2.0 * (v - 0.5) : v;
        }
        double nuisance = rng.normal();
        int label;
        if (std::isinf(config.signal_strength) && m > 0) {
            label = sum > 0.0 ? 1 : 0;
        } else {
            double score = config.signal_strength * sum * norm + nuisance;
            label = score > 0.0 ? 1 : 0;
        }
        if (config.label_noise > 0.0 && rng.uniform_real() < config.label_noise) label = 1 - label;
        out.matrix.labels[i] = label;
    }
    return out;
}

// Renders a numeric matrix as a RawTable; label (if any) becomes a trailing
// "label" column so the result round-trips through the CSV/ingest path.
inline RawTable matrix_to_raw_table(const FeatureMatrix& matrix, const std::string& label_name = "label") {
    RawTable table;
    const std::size_t n = matrix.n_rows();
    for (std::size_t j = 0; j < matrix.n_cols(); ++j) {
        RawColumn col;
        col.name = matrix.meta[j].name;
        col.kind = ColumnKind::Numeric;
        col.cells.reserve(n);
        for (std::size_t r = 0; r < n; ++r) {
            col.cells.emplace_back(detail::format_double(matrix.columns[j][r]));
        }
        table.columns.push_back(std::move(col));
    }
    if (matrix.has_labels()) {
        RawColumn col;
        col.name = label_name;
        col.kind = ColumnKind::Numeric;
        col.cells.reserve(n);
        for (std::size_t r = 0; r < n; ++r) col.cells.emplace_back(std::to_string(matrix.labels[r]));
        table.columns.push_back(std::move(col));
    }
    return table;
}

// Masks exactly round(fraction * cells) distinct cells, uniformly at random.
inline RawTable mask_missing(const RawTable& table, double fraction, std::uint64_t seed) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("mask_missing: fraction must be in [0, 1]");
    }
    RawTable out = table;
    const std::size_t n = table.n_rows();
    const std::size_t p = table.n_cols();
    const std::size_t cells = n * p;
    const std::size_t target = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(cells)));

    Rng rng(derive_seed(seed, {stream::kMask}));
    std::vector<std::size_t> picks = rng.sample_without_replacement(cells, target);
    for (std::size_t cell : picks) {
        out.columns[cell / n].cells[cell % n] = std::nullopt;
    }
    return out;
}

}  // namespace fuzzyforest
