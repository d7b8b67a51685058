#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swor/errors.hpp"
#include "swor/hypergeom.hpp"
#include "swor/numeric.hpp"
#include "swor/population.hpp"

namespace swor {

/// Two enumerated subset sums closer than 1e-9·α are the same atom: sums of
/// one multiset differ by exact cancellation only, so the tolerance absorbs
/// nothing but float noise.
inline constexpr double kAtomTolerance = 1e-9;

struct EnumerationLimits {
    long max_n = 25;
    long long max_subsets = 5'000'000;
};

/// The exact law of the sum over a uniform k-subset: support values with
/// big-integer counts over the common denominator C(n,k).
template <class S>
struct DiscreteDistribution {
    std::vector<S> support;     ///< strictly increasing atom values
    std::vector<BigInt> counts; ///< Σ counts = denominator
    BigInt denominator;
    long n = 0;
    long k = 0;
    S atom_tol{}; ///< boundary tolerance for tail queries; 0 in exact mode

    std::size_t size() const { return support.size(); }

    S probability(std::size_t idx) const {
        if constexpr (scalar_traits<S>::is_exact)
            return scalar_traits<S>::from_ratio(counts[idx], denominator);
        else
            return to_double(counts[idx]) / to_double(denominator);
    }
};

namespace detail {

/// Emits the swap (removed, added) between consecutive k-subsets of {0..n-1}
/// in the revolving-door order A(n,k) = A(n-1,k) ++ reversed(A(n-1,k-1))+{n-1}.
/// The junction always swaps a single element, so every subset is reached
/// from its predecessor in O(1).
template <class F>
void gray_transitions(long n, long k, bool forward, F& emit) {
    if (k <= 0 || k >= n) return;
    const long r = (k >= 2 ? k - 2 : n - 2);
    if (forward) {
        gray_transitions(n - 1, k, true, emit);
        emit(r, n - 1);
        gray_transitions(n - 1, k - 1, false, emit);
    } else {
        gray_transitions(n - 1, k - 1, true, emit);
        emit(n - 1, r);
        gray_transitions(n - 1, k, false, emit);
    }
}

} // namespace detail

/// Visits the sum of every k-subset of x exactly once, starting from
/// {0,...,k-1} and updating by one swap per step. In float mode the running
/// sum is re-accumulated from the subset mask every few thousand steps to cap
/// drift far below the atom tolerance.
template <class S, class F>
void for_each_subset_sum(const std::vector<S>& x, long k, F&& visit) {
    const long n = static_cast<long>(x.size());
    S sum = scalar_traits<S>::from_int(0);
    std::vector<unsigned char> mask(x.size(), 0);
    for (long j = 0; j < k; ++j) {
        sum += x[static_cast<std::size_t>(j)];
        mask[static_cast<std::size_t>(j)] = 1;
    }
    visit(std::as_const(sum));
    long steps_since_refresh = 0;
    auto emit = [&](long removed, long added) {
        mask[static_cast<std::size_t>(removed)] = 0;
        mask[static_cast<std::size_t>(added)] = 1;
        sum += x[static_cast<std::size_t>(added)] - x[static_cast<std::size_t>(removed)];
        if constexpr (!scalar_traits<S>::is_exact) {
            if (++steps_since_refresh == 4096) {
                steps_since_refresh = 0;
                sum = 0.0;
                for (std::size_t j = 0; j < x.size(); ++j)
                    if (mask[j]) sum += x[j];
            }
        }
        visit(std::as_const(sum));
    };
    detail::gray_transitions(n, k, true, emit);
}

/// Enumerates all C(n,k) subset sums of P and groups equal ones into atoms.
template <class S>
DiscreteDistribution<S> exact_distribution(const Population<S>& p, long k,
                                           const EnumerationLimits& limits = {}) {
    const long n = p.n();
    if (k < 1 || k > n - 1)
        throw DomainError("exact_distribution needs 1 <= k <= n-1, got k=" +
                          std::to_string(k) + " with n=" + std::to_string(n));
    if (n > limits.max_n)
        throw BudgetExceededError("n=" + std::to_string(n) +
                                  " exceeds the enumeration limit n <= " +
                                  std::to_string(limits.max_n));
    const BigInt total = binomial(n, k);
    if (total > limits.max_subsets)
        throw BudgetExceededError("C(" + std::to_string(n) + "," + std::to_string(k) +
                                  ")=" + total.str() + " exceeds the subset budget " +
                                  std::to_string(limits.max_subsets));

    DiscreteDistribution<S> d;
    d.n = n;
    d.k = k;
    d.denominator = total;
    if constexpr (scalar_traits<S>::is_exact) {
        std::map<S, long long> atoms;
        for_each_subset_sum(p.values(), k, [&](const S& s) { ++atoms[s]; });
        for (auto& [value, count] : atoms) {
            d.support.push_back(value);
            d.counts.push_back(count);
        }
    } else {
        std::vector<double> sums;
        sums.reserve(static_cast<std::size_t>(total.template convert_to<long long>()));
        for_each_subset_sum(p.values(), k, [&](const double& s) { sums.push_back(s); });
        std::sort(sums.begin(), sums.end());
        d.atom_tol = kAtomTolerance * to_double(p.alpha());
        for (std::size_t j = 0; j < sums.size();) {
            const double anchor = sums[j];
            std::size_t run = j;
            double group_sum = 0.0;
            while (run < sums.size() && sums[run] <= anchor + d.atom_tol)
                group_sum += sums[run++];
            // The group mean, not the anchor, keeps moments of the grouped
            // law at float precision (members differ by noise only).
            d.support.push_back(group_sum / static_cast<double>(run - j));
            d.counts.push_back(static_cast<long long>(run - j));
            j = run;
        }
    }
    return d;
}

/// The law of the two-block population P_{i,α} in closed form: the sum equals
/// H·(α/i) − (k−H)·(α/(n−i)) for H ~ Hyp(n,i,k), so atoms and counts come
/// straight from the hypergeometric pmf — no enumeration, any n.
template <class S>
DiscreteDistribution<S> two_block_distribution(long n, long i, long k, const S& alpha) {
    const HypergeomParams hp(n, i, k);
    if (!(alpha > scalar_traits<S>::from_int(0)))
        throw DomainError("two_block_distribution needs alpha > 0");
    DiscreteDistribution<S> d;
    d.n = n;
    d.k = k;
    d.denominator = binomial(n, k);
    if constexpr (!scalar_traits<S>::is_exact)
        d.atom_tol = kAtomTolerance * to_double(alpha);
    const S pos_step = alpha / scalar_traits<S>::from_int(i);
    const S neg_step = alpha / scalar_traits<S>::from_int(n - i);
    for (long m = hp.support_min(); m <= hp.support_max(); ++m) {
        d.support.push_back(scalar_traits<S>::from_int(m) * pos_step -
                            scalar_traits<S>::from_int(k - m) * neg_step);
        d.counts.push_back(binomial(i, m) * binomial(n - i, k - m));
    }
    return d;
}

/// The law of the sum for the extreme population (α, 0, ..., 0, −α): atoms
/// {−α, 0, α} with P(±α) = k(n−k)/(n(n−1)). For n = 2 the zero atom vanishes.
template <class S>
DiscreteDistribution<S> extreme_distribution(long n, long k, const S& alpha) {
    if (n < 2 || k < 1 || k > n - 1)
        throw DomainError("extreme_distribution needs n >= 2 and 1 <= k <= n-1");
    if (!(alpha > scalar_traits<S>::from_int(0)))
        throw DomainError("extreme_distribution needs alpha > 0");
    DiscreteDistribution<S> d;
    d.n = n;
    d.k = k;
    d.denominator = binomial(n, k);
    if constexpr (!scalar_traits<S>::is_exact)
        d.atom_tol = kAtomTolerance * to_double(alpha);
    const BigInt edge = binomial(n - 2, k - 1); // subsets picking α but not −α
    const BigInt middle = d.denominator - 2 * edge;
    d.support.push_back(-alpha);
    d.counts.push_back(edge);
    if (middle > 0) {
        d.support.push_back(scalar_traits<S>::from_int(0));
        d.counts.push_back(middle);
    }
    d.support.push_back(alpha);
    d.counts.push_back(edge);
    return d;
}

/// P(X > t) (strict) or P(X >= t); boundary atoms are resolved with the
/// distribution's atom tolerance.
template <class S>
S tail_probability(const DiscreteDistribution<S>& d, const S& t, bool strict) {
    BigInt hits = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
        const S& v = d.support[j];
        bool in;
        if constexpr (scalar_traits<S>::is_exact)
            in = strict ? (v > t) : (v >= t);
        else
            in = strict ? (v > t + d.atom_tol) : (v >= t - d.atom_tol);
        if (in) hits += d.counts[j];
    }
    if constexpr (scalar_traits<S>::is_exact)
        return scalar_traits<S>::from_ratio(hits, d.denominator);
    else
        return to_double(hits) / to_double(d.denominator);
}

template <class S>
S expected_value(const DiscreteDistribution<S>& d) {
    S acc = scalar_traits<S>::from_int(0);
    for (std::size_t j = 0; j < d.size(); ++j) acc += d.support[j] * d.probability(j);
    return acc;
}

template <class S>
S expected_abs(const DiscreteDistribution<S>& d) {
    S acc = scalar_traits<S>::from_int(0);
    for (std::size_t j = 0; j < d.size(); ++j)
        acc += scalar_traits<S>::abs(d.support[j]) * d.probability(j);
    return acc;
}

/// The quantities tied together by the balance identity of a centered sum:
/// E(X⁺) = E(X⁻), and P(X > 0) = E|X| / (2·E(X | X > 0)) with residual
/// exactly zero in exact mode.
template <class S>
struct PositivePartReport {
    S e_plus;            ///< E max(X, 0)
    S e_minus;           ///< E max(−X, 0)
    S e_abs;             ///< E|X|
    S cond_mean_pos;     ///< E(X | X > 0)
    S folklore_residual; ///< P(X > 0) − E|X| / (2·E(X | X > 0))
};

template <class S>
PositivePartReport<S> positive_part_identities(const DiscreteDistribution<S>& d) {
    const S zero = scalar_traits<S>::from_int(0);
    PositivePartReport<S> r{zero, zero, zero, zero, zero};
    S p_pos = zero;
    for (std::size_t j = 0; j < d.size(); ++j) {
        const S& v = d.support[j];
        bool positive, negative;
        if constexpr (scalar_traits<S>::is_exact) {
            positive = v > zero;
            negative = v < zero;
        } else {
            positive = v > d.atom_tol;
            negative = v < -d.atom_tol;
        }
        const S p = d.probability(j);
        if (positive) {
            r.e_plus += v * p;
            p_pos += p;
        } else if (negative) {
            r.e_minus += -v * p;
        }
    }
    r.e_abs = r.e_plus + r.e_minus;
    if (!(p_pos > zero))
        throw NoPositiveMassError("P(X > 0) = 0: conditional mean and residual undefined");
    r.cond_mean_pos = r.e_plus / p_pos;
    r.folklore_residual =
        p_pos - r.e_abs / (scalar_traits<S>::from_int(2) * r.cond_mean_pos);
    return r;
}

} // namespace swor
