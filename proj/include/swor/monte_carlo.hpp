#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "swor/errors.hpp"
#include "swor/exact_dist.hpp"
#include "swor/numeric.hpp"
#include "swor/population.hpp"

namespace swor {

/// SplitMix64: tiny, fast, and splits into independent streams by seeding, so
/// a sharded run is reproducible from (seed, reps, shards) alone.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound) by rejection — no modulo bias.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

struct MCEstimate {
    double estimate = 0.0;  ///< empirical tail frequency, in [0,1]
    double std_error = 0.0; ///< sqrt(estimate·(1−estimate)/reps)
    long long reps = 0;
    std::uint64_t seed = 0;
};

namespace detail {

/// Stream seed for shard s: decorrelates shards while keeping the split a
/// pure function of (seed, s).
inline std::uint64_t shard_seed(std::uint64_t seed, int shard) {
    SplitMix64 mixer(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(shard + 1)));
    mixer.next();
    return mixer.next();
}

} // namespace detail

/// Estimates P(X > t) (strict) or P(X >= t) by drawing uniform k-subsets:
/// a partial Fisher–Yates shuffle picks k indices in O(k), then the swaps are
/// undone so the next repetition starts from the identity arrangement.
/// Deterministic for fixed (seed, reps, shards).
template <class S>
MCEstimate mc_tail(const Population<S>& p, long k, const S& t, bool strict,
                   long long reps, std::uint64_t seed, int shards = 8) {
    const long n = p.n();
    if (k < 1 || k > n - 1)
        throw DomainError("mc_tail needs 1 <= k <= n-1, got k=" + std::to_string(k));
    if (reps < 1) throw DomainError("mc_tail needs reps >= 1");
    if (shards < 1) throw DomainError("mc_tail needs shards >= 1");

    std::vector<double> x;
    x.reserve(p.values().size());
    for (const S& v : p.values()) x.push_back(to_double(v));
    const double td = to_double(t);
    const double tol = kAtomTolerance * to_double(p.alpha());

    std::vector<std::uint32_t> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0u);
    std::vector<std::uint32_t> picked(static_cast<std::size_t>(k));

    long long hits = 0;
    const long long base = reps / shards, extra = reps % shards;
    for (int s = 0; s < shards; ++s) {
        SplitMix64 rng(detail::shard_seed(seed, s));
        const long long shard_reps = base + (s < extra ? 1 : 0);
        for (long long rep = 0; rep < shard_reps; ++rep) {
            double sum = 0.0;
            for (long j = 0; j < k; ++j) {
                const std::size_t r =
                    static_cast<std::size_t>(j) +
                    static_cast<std::size_t>(rng.uniform_below(static_cast<std::uint64_t>(n - j)));
                std::swap(idx[static_cast<std::size_t>(j)], idx[r]);
                picked[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(r);
                sum += x[idx[static_cast<std::size_t>(j)]];
            }
            if (strict ? (sum > td + tol) : (sum >= td - tol)) ++hits;
            for (long j = k - 1; j >= 0; --j)
                std::swap(idx[static_cast<std::size_t>(j)], idx[picked[static_cast<std::size_t>(j)]]);
        }
    }

    MCEstimate est;
    est.reps = reps;
    est.seed = seed;
    est.estimate = static_cast<double>(hits) / static_cast<double>(reps);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(reps));
    return est;
}

} // namespace swor
