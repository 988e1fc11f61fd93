#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

namespace fuzzyforest {

// splitmix64 finalizer, used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a child seed from a root seed and a stream path, e.g.
// derive_seed(seed, {kStreamForest, tree_index}). Children of distinct
// paths are statistically independent, which is what makes per-tree,
// per-module and per-fold parallelism schedule-invariant.
inline std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = splitmix64(root);
    for (std::uint64_t part : path) {
        h = splitmix64(h ^ splitmix64(part + 0x632be59bd9b4e019ULL));
    }
    return h;
}

// Fixed stream tags so unrelated consumers of the same root seed never collide.
namespace stream {
constexpr std::uint64_t kBootstrap = 101;
constexpr std::uint64_t kTreeGrow = 102;
constexpr std::uint64_t kVim = 103;
constexpr std::uint64_t kScreen = 201;
constexpr std::uint64_t kSelect = 202;
constexpr std::uint64_t kFinalFit = 203;
constexpr std::uint64_t kImpute = 301;
constexpr std::uint64_t kSynth = 302;
constexpr std::uint64_t kMask = 303;
constexpr std::uint64_t kFold = 401;
constexpr std::uint64_t kShuffle = 402;
}  // namespace stream

// Deterministic RNG wrapper. The engine (mt19937_64) is fully specified by
// the standard; the distribution transforms below are hand-rolled because
// std::uniform_int_distribution and friends are implementation-defined and
// would break the bit-reproducibility contract across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed ^ 0xa5a5a5a55a5a5a5aULL)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform index in [0, n). n must be > 0.
    std::size_t uniform_index(std::size_t n) {
        // multiply-shift; bias is O(n / 2^64), negligible for any n we use
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Uniform real in [0, 1).
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller. Consumes two draws per value and
    // caches nothing, so the draw count per call is fixed.
    double normal() {
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        double u2 = uniform_real();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // First k elements of a random permutation of 0..n-1, without replacement.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        if (k > n) k = n;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + uniform_index(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace fuzzyforest
