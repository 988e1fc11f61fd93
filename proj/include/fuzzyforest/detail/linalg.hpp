#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fuzzyforest::detail {

// Dense row-major square matrix helpers for the small symmetric systems that
// show up in the ridge logit Newton step and the PMM linear predictor.
// Problem sizes here are at most a few hundred, so plain O(n^3) is fine.

// In-place Cholesky factorization A = L L^T (lower triangle). Returns false
// if a pivot is not strictly positive.
inline bool cholesky(std::vector<double>& a, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double d = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        double ljj = std::sqrt(d);
        a[j * n + j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = s / ljj;
        }
    }
    return true;
}

// Solves A x = b for symmetric positive definite A. If the factorization
// fails, retries with growing diagonal jitter. Throws on final failure.
inline std::vector<double> solve_spd(std::vector<double> a, std::vector<double> b, std::size_t n) {
    if (a.size() != n * n || b.size() != n) {
        throw std::invalid_argument("solve_spd: dimension mismatch");
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a[i * n + i];
    double scale = trace > 0.0 ? trace / static_cast<double>(n) : 1.0;

    std::vector<double> chol;
    double jitter = 0.0;
    for (int attempt = 0; attempt < 6; ++attempt) {
        chol = a;
        if (jitter > 0.0) {
            for (std::size_t i = 0; i < n; ++i) chol[i * n + i] += jitter;
        }
        if (cholesky(chol, n)) {
            // forward then backward substitution
            std::vector<double> x = b;
            for (std::size_t i = 0; i < n; ++i) {
                double s = x[i];
                for (std::size_t k = 0; k < i; ++k) s -= chol[i * n + k] * x[k];
                x[i] = s / chol[i * n + i];
            }
            for (std::size_t ii = n; ii > 0; --ii) {
                std::size_t i = ii - 1;
                double s = x[i];
                for (std::size_t k = i + 1; k < n; ++k) s -= chol[k * n + i] * x[k];
                x[i] = s / chol[i * n + i];
            }
            return x;
        }
        jitter = (jitter == 0.0) ? 1e-10 * scale : jitter * 100.0;
    }
    throw std::runtime_error("solve_spd: matrix not positive definite even with jitter");
}

// Ordinary least squares with a small ridge for rank safety:
// minimizes ||X w - y||^2 + ridge ||w||^2 via normal equations.
// X is row-major n_rows x n_cols.
inline std::vector<double> least_squares(const std::vector<double>& x, const std::vector<double>& y,
                                         std::size_t n_rows, std::size_t n_cols, double ridge) {
    std::vector<double> xtx(n_cols * n_cols, 0.0);
    std::vector<double> xty(n_cols, 0.0);
    for (std::size_t r = 0; r < n_rows; ++r) {
        const double* row = &x[r * n_cols];
        for (std::size_t i = 0; i < n_cols; ++i) {
            xty[i] += row[i] * y[r];
            for (std::size_t j = i; j < n_cols; ++j) xtx[i * n_cols + j] += row[i] * row[j];
        }
    }
    for (std::size_t i = 0; i < n_cols; ++i) {
        for (std::size_t j = 0; j < i; ++j) xtx[i * n_cols + j] = xtx[j * n_cols + i];
        xtx[i * n_cols + i] += ridge;
    }
    return solve_spd(std::move(xtx), std::move(xty), n_cols);
}

}  // namespace fuzzyforest::detail
