#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "swor/bound_result.hpp"
#include "swor/errors.hpp"
#include "swor/numeric.hpp"

namespace swor {

/// e^{-1/3} / (8·sqrt(2π)) — the constant in the normalized-MAD lower bound
/// and in the tail bounds at zero built on top of it.
inline double mad_bound_constant() {
    static const double c =
        std::exp(-1.0 / 3.0) / (8.0 * std::sqrt(2.0 * std::numbers::pi));
    return c;
}

/// e^{-1/3} / (16·sqrt(2π)) — the constant in the mode-probability bound.
inline double mode_bound_constant() {
    static const double c =
        std::exp(-1.0 / 3.0) / (16.0 * std::sqrt(2.0 * std::numbers::pi));
    return c;
}

/// Parameters of Hyp(n, i, k): the count of marked elements in a uniform
/// k-subset of n elements of which i are marked. Both i and k stay in
/// [1, n-1]; degenerate counts (i or k in {0, n}) are constants, not
/// distributions, and are rejected.
struct HypergeomParams {
    long n, i, k;

    HypergeomParams(long n_, long i_, long k_) : n(n_), i(i_), k(k_) {
        if (n < 2 || i < 1 || i > n - 1 || k < 1 || k > n - 1)
            throw DomainError("Hyp(n,i,k) requires 1 <= i,k <= n-1; got n=" +
                              std::to_string(n) + " i=" + std::to_string(i) +
                              " k=" + std::to_string(k));
    }

    long support_min() const { return std::max(0L, k - (n - i)); }
    long support_max() const { return std::min(i, k); }

    /// The integer m with ik/n in (m-1, m], i.e. ceil(ik/n).
    long mean_ceil() const { return (i * k + n - 1) / n; }
};

inline HypergeomParams complement(const HypergeomParams& p) {
    return HypergeomParams(p.n, p.n - p.i, p.k);
}

/// P(H = m). Exact mode forms the big-integer binomial ratio; float mode
/// exponentiates a log-gamma difference.
template <class S>
S pmf(const HypergeomParams& p, long m) {
    if (m < p.support_min() || m > p.support_max()) return scalar_traits<S>::from_int(0);
    if constexpr (scalar_traits<S>::is_exact) {
        return scalar_traits<S>::from_ratio(binomial(p.i, m) * binomial(p.n - p.i, p.k - m),
                                            binomial(p.n, p.k));
    } else {
        return std::exp(log_binomial(p.i, m) + log_binomial(p.n - p.i, p.k - m) -
                        log_binomial(p.n, p.k));
    }
}

/// P(H <= m).
template <class S>
S cdf(const HypergeomParams& p, long m) {
    if (m < p.support_min()) return scalar_traits<S>::from_int(0);
    const long top = std::min(m, p.support_max());
    if constexpr (scalar_traits<S>::is_exact) {
        BigInt acc = 0;
        for (long j = p.support_min(); j <= top; ++j)
            acc += binomial(p.i, j) * binomial(p.n - p.i, p.k - j);
        return scalar_traits<S>::from_ratio(acc, binomial(p.n, p.k));
    } else {
        double acc = 0;
        for (long j = p.support_min(); j <= top; ++j) acc += pmf<double>(p, j);
        return std::min(acc, 1.0);
    }
}

/// The full pmf row over the support. The float path anchors one log-gamma
/// evaluation at the mean and extends by the term ratio
/// pmf(m+1)/pmf(m) = (i-m)(k-m) / ((m+1)(n-i-k+m+1)), which keeps sweeps over
/// all (n,i,k) cheap and numerically stable (ratios shrink away from the
/// mode).
inline std::vector<double> pmf_row(const HypergeomParams& p) {
    const long lo = p.support_min(), hi = p.support_max();
    std::vector<double> row(static_cast<std::size_t>(hi - lo + 1));
    const long anchor = std::clamp(p.mean_ceil(), lo, hi);
    row[static_cast<std::size_t>(anchor - lo)] = pmf<double>(p, anchor);
    const double n = p.n, i = p.i, k = p.k;
    for (long m = anchor; m < hi; ++m)
        row[static_cast<std::size_t>(m + 1 - lo)] =
            row[static_cast<std::size_t>(m - lo)] *
            ((i - m) * (k - m)) / ((m + 1) * (n - i - k + m + 1));
    for (long m = anchor; m > lo; --m)
        row[static_cast<std::size_t>(m - 1 - lo)] =
            row[static_cast<std::size_t>(m - lo)] *
            (m * (n - i - k + m)) / ((i - m + 1) * (k - m + 1));
    return row;
}

/// Exact pmf numerators C(i,m)·C(n-i,k-m) over the support; the shared
/// denominator is C(n,k). Vandermonde's identity says the numerators sum to
/// exactly C(n,k).
inline std::vector<BigInt> pmf_row_numerators(const HypergeomParams& p) {
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(p.support_max() - p.support_min() + 1));
    for (long m = p.support_min(); m <= p.support_max(); ++m)
        row.push_back(binomial(p.i, m) * binomial(p.n - p.i, p.k - m));
    return row;
}

template <class S>
S mean(const HypergeomParams& p) {
    return scalar_traits<S>::from_ratio(static_cast<long long>(p.i) * p.k,
                                        static_cast<long long>(p.n));
}

template <class S>
S variance(const HypergeomParams& p) {
    const BigInt num = BigInt(p.k) * p.i * (p.n - p.i) * (p.n - p.k);
    const BigInt den = BigInt(p.n) * p.n * (p.n - 1);
    return scalar_traits<S>::from_ratio(num, den);
}

/// E|H - ik/n| via the closed form (2m/n)·(n-i-k+m)·P(H=m) at m = ceil(ik/n).
/// Agrees with the direct sum Σ|j - ik/n|·pmf(j) over the whole support.
template <class S>
S mad_exact(const HypergeomParams& p) {
    const long m = p.mean_ceil();
    if constexpr (scalar_traits<S>::is_exact) {
        const BigInt num = BigInt(2) * m * (p.n - p.i - p.k + m) * binomial(p.i, m) *
                           binomial(p.n - p.i, p.k - m);
        const BigInt den = BigInt(p.n) * binomial(p.n, p.k);
        return scalar_traits<S>::from_ratio(num, den);
    } else {
        return 2.0 * static_cast<double>(m) / p.n * (p.n - p.i - p.k + m) *
               pmf<double>(p, m);
    }
}

/// n/(2i(n-i)) · E|H - ik/n| — the scale-free form the sum-tail bounds use.
template <class S>
S normalized_mad(const HypergeomParams& p) {
    return scalar_traits<S>::from_ratio(static_cast<long long>(p.n),
                                        2LL * p.i * (p.n - p.i)) *
           mad_exact<S>(p);
}

/// The uniform-in-i lower bound on normalized_mad:
/// (e^{-1/3}/(8√(2π))) · sqrt(k/n) · sqrt(n-k)/n.
inline double mad_normalized_lower_bound(long n, long k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw DomainError("mad_normalized_lower_bound needs 1 <= k <= n-1, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    return mad_bound_constant() * std::sqrt(kd / nd) * std::sqrt(nd - kd) / nd;
}

/// Lower bound on the mode probability P(H = m) at m = ceil(ik/n):
/// (e^{-1/3}/(16√(2π))) · sqrt(i(n-i)k(n-k) / (m(i-m)(k-m)(n-i-k+m)·n)).
/// Applicable for m in {2, ..., min(i,k)-1} with n-i-k+m >= 2. The second
/// condition is essential, not cosmetic: at n-i-k+m = 1 the inequality can
/// fail outright (e.g. Hyp(112,110,110) has P(H=109) ≈ 0.03539 while the
/// right-hand side is ≈ 0.03558). The sweep driver skips inapplicable cells
/// rather than aborting.
inline BoundResult pmf_mode_lower_bound(const HypergeomParams& p) {
    const long m = p.mean_ceil();
    std::map<std::string, double> inputs = {{"n", static_cast<double>(p.n)},
                                            {"i", static_cast<double>(p.i)},
                                            {"k", static_cast<double>(p.k)},
                                            {"m", static_cast<double>(m)}};
    if (m < 2 || m > std::min(p.i, p.k) - 1)
        return BoundResult::not_applicable(
            BoundKind::lower,
            "m=" + std::to_string(m) + " outside {2,...,min(i,k)-1}", std::move(inputs));
    if (p.n - p.i - p.k + m < 2)
        return BoundResult::not_applicable(
            BoundKind::lower,
            "n-i-k+m=" + std::to_string(p.n - p.i - p.k + m) + " below 2", std::move(inputs));
    // Within the gates every factor below is a positive integer.
    const double num = static_cast<double>(p.i) * (p.n - p.i) * p.k * (p.n - p.k);
    const double den = static_cast<double>(m) * (p.i - m) * (p.k - m) *
                       (p.n - p.i - p.k + m) * p.n;
    return BoundResult::ok(BoundKind::lower, mode_bound_constant() * std::sqrt(num / den),
                           std::move(inputs));
}

/// Robbins' refinement of Stirling's formula: both ends bracket ln(n!).
struct StirlingBracket {
    double lower; ///< ½ln(2πn) + n·ln n − n + 1/(12n+1), in nats
    double upper; ///< ½ln(2πn) + n·ln n − n + 1/(12n), in nats
};

inline StirlingBracket robbins_bounds(long n) {
    if (n < 1) throw DomainError("robbins_bounds needs n >= 1, got " + std::to_string(n));
    const double nd = static_cast<double>(n);
    const double base = 0.5 * std::log(2.0 * std::numbers::pi * nd) + nd * std::log(nd) - nd;
    return {base + 1.0 / (12.0 * nd + 1.0), base + 1.0 / (12.0 * nd)};
}

} // namespace swor
