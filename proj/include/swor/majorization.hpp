#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "swor/errors.hpp"
#include "swor/numeric.hpp"
#include "swor/population.hpp"

namespace swor {

/// Absolute prefix-sum tolerance in float mode, stated at the scale α = 1
/// (majorization is scale-equivariant, so inputs are compared at the common
/// scale max(Σ|x|, Σ|y|)/2).
inline constexpr double kMajorizationTolerance = 1e-9;

namespace detail {

template <class S>
std::vector<S> sorted_descending(std::vector<S> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

template <class S>
S abs_sum_of(const std::vector<S>& v) {
    S acc = scalar_traits<S>::from_int(0);
    for (const S& x : v) acc += scalar_traits<S>::abs(x);
    return acc;
}

} // namespace detail

/// x ≺ y: every sorted-descending prefix sum of x is at most the matching
/// prefix sum of y, and the totals agree. Exact comparisons for rationals; a
/// scale-aware absolute tolerance for doubles.
template <class S>
bool is_majorized_by(const std::vector<S>& x, const std::vector<S>& y) {
    if (x.size() != y.size())
        throw LengthMismatchError("majorization needs equal lengths, got " +
                                  std::to_string(x.size()) + " and " +
                                  std::to_string(y.size()));
    if (x.empty())
        throw TooShortError("majorization needs non-empty vectors");
    const std::vector<S> xs = detail::sorted_descending(x);
    const std::vector<S> ys = detail::sorted_descending(y);
    S tol = scalar_traits<S>::from_int(0);
    if constexpr (!scalar_traits<S>::is_exact) {
        const double scale =
            std::max(to_double(detail::abs_sum_of(xs)), to_double(detail::abs_sum_of(ys))) / 2.0;
        tol = kMajorizationTolerance * std::max(scale, 1e-300);
    }
    S px = scalar_traits<S>::from_int(0), py = px;
    for (std::size_t l = 0; l < xs.size(); ++l) {
        px += xs[l];
        py += ys[l];
        if (l + 1 < xs.size()) {
            if (px > py + tol) return false;
        } else {
            if (scalar_traits<S>::abs(px - py) > tol) return false;
        }
    }
    return true;
}

template <class S>
struct PrefixStep {
    long ell;
    S dominated_prefix;  ///< Σ of the first ell sorted entries of the minimal vector
    S dominating_prefix; ///< Σ of the first ell sorted entries of the input
};

/// Witness that the two-block vector P_{i,α} sits below a population in the
/// majorization order.
template <class S>
struct MajorizationCertificate {
    long index_i;                        ///< block split: count of nonnegative entries
    Population<S> minimal_vector;        ///< (α/i ×i, −α/(n−i) ×(n−i))
    std::vector<PrefixStep<S>> prefix_trace;
};

/// Builds P_{i,α} for i = the number of nonnegative entries of P (zeros count
/// as nonnegative) and records the prefix-sum trace against P sorted
/// descending. P_{i,α} ≺ P holds for any split that puts every positive entry
/// in the first block and every negative one in the second.
template <class S>
MajorizationCertificate<S> minimal_population(const Population<S>& p) {
    const S zero = scalar_traits<S>::from_int(0);
    const S alpha = p.alpha();
    if (!(alpha > zero))
        throw DegeneratePopulationError("minimal_population needs alpha > 0");
    const std::vector<S> sorted = detail::sorted_descending(p.values());
    const long n = p.n();
    long i = static_cast<long>(
        std::count_if(sorted.begin(), sorted.end(), [&](const S& v) { return v >= zero; }));
    i = std::clamp(i, 1L, n - 1);

    std::vector<S> minimal(static_cast<std::size_t>(n));
    const S pos = alpha / scalar_traits<S>::from_int(i);
    const S neg = -alpha / scalar_traits<S>::from_int(n - i);
    std::fill(minimal.begin(), minimal.begin() + i, pos);
    std::fill(minimal.begin() + i, minimal.end(), neg);

    MajorizationCertificate<S> cert{i, Population<S>(std::move(minimal)), {}};
    cert.prefix_trace.reserve(static_cast<std::size_t>(n));
    S pmin = zero, pin = zero;
    for (long l = 0; l < n; ++l) {
        pmin += cert.minimal_vector.values()[static_cast<std::size_t>(l)];
        pin += sorted[static_cast<std::size_t>(l)];
        cert.prefix_trace.push_back({l + 1, pmin, pin});
    }
    return cert;
}

/// (α, 0, ..., 0, −α): the unique maximal element among zero-sum vectors with
/// Σ|x_i| = 2α; every such vector is majorized by it.
template <class S>
Population<S> extreme_population(long n, const S& alpha) {
    if (n < 2) throw TooShortError("extreme_population needs n >= 2");
    if (!(alpha > scalar_traits<S>::from_int(0)))
        throw DomainError("extreme_population needs alpha > 0");
    std::vector<S> values(static_cast<std::size_t>(n), scalar_traits<S>::from_int(0));
    values.front() = alpha;
    values.back() = -alpha;
    return Population<S>(std::move(values));
}

/// Moves eps from a larger entry to a smaller one without letting them cross:
/// the classic generator of pairs P' ≺ P. Indices are 0-based.
template <class S>
Population<S> robin_hood_transfer(const Population<S>& p, std::size_t donor,
                                  std::size_t receiver, const S& eps) {
    if (donor >= p.values().size() || receiver >= p.values().size() || donor == receiver)
        throw InvalidTransferError("transfer needs two distinct in-range indices");
    const S gap = p.values()[donor] - p.values()[receiver];
    if (!(gap > scalar_traits<S>::from_int(0)))
        throw InvalidTransferError("donor value must exceed receiver value");
    if (!(eps > scalar_traits<S>::from_int(0)) ||
        eps > gap / scalar_traits<S>::from_int(2))
        throw InvalidTransferError("eps must lie in (0, (donor - receiver)/2]");
    std::vector<S> values = p.values();
    values[donor] -= eps;
    values[receiver] += eps;
    return Population<S>(std::move(values));
}

} // namespace swor
