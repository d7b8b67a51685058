#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "swor/bound_result.hpp"
#include "swor/errors.hpp"
#include "swor/hypergeom.hpp"
#include "swor/numeric.hpp"
#include "swor/population.hpp"

namespace swor {

/// Hoeffding's classical bound: P(X >= t) <= exp(-2t² / (k(b-a)²)).
inline BoundResult hoeffding_upper(long k, double a, double b, double t) {
    std::map<std::string, double> in = {{"k", static_cast<double>(k)}, {"a", a}, {"b", b}, {"t", t}};
    if (k < 1) return BoundResult::not_applicable(BoundKind::upper, "k < 1", std::move(in));
    if (!(t > 0)) return BoundResult::not_applicable(BoundKind::upper, "t <= 0", std::move(in));
    if (!(b > a)) return BoundResult::not_applicable(BoundKind::upper, "b <= a", std::move(in));
    const double raw = std::exp(-2.0 * t * t / (static_cast<double>(k) * (b - a) * (b - a)));
    return BoundResult::ok(BoundKind::upper, raw, std::move(in));
}

/// P(X >= 0) >= k/n, valid only in the astronomically sparse regime
/// n >= 10^46·k. The gate is an exact big-integer comparison; no floating
/// type can represent it faithfully.
inline BoundResult pokrovskiy_lower(const BigInt& n, const BigInt& k) {
    std::map<std::string, double> in = {{"n", to_double(n)}, {"k", to_double(k)}};
    if (k < 1 || n <= k)
        return BoundResult::not_applicable(BoundKind::lower, "need 1 <= k < n", std::move(in));
    static const BigInt gate = boost::multiprecision::pow(BigInt(10), 46);
    if (n < gate * k)
        return BoundResult::not_applicable(BoundKind::lower, "n < 10^46 * k", std::move(in));
    return BoundResult::ok(BoundKind::lower, to_double(Rational(k, n)), std::move(in));
}

/// P(X > 0) >= (e^{-1/3}/(8√(2π))) · (k/n) · sqrt((n-k)/(nk)); coincides with
/// the normalized-MAD lower bound.
inline BoundResult lower_at_zero(long n, long k) {
    std::map<std::string, double> in = {{"n", static_cast<double>(n)}, {"k", static_cast<double>(k)}};
    if (n < 2 || k < 1 || k > n - 1)
        return BoundResult::not_applicable(BoundKind::lower, "need 1 <= k <= n-1", std::move(in));
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    const double raw = mad_bound_constant() * (kd / nd) * std::sqrt((nd - kd) / (nd * kd));
    return BoundResult::ok(BoundKind::lower, raw, std::move(in));
}

/// P(X >= 0) <= 1 − lower_at_zero(n,k), by applying the zero-crossing lower
/// bound to the negated population.
inline BoundResult upper_at_zero(long n, long k) {
    std::map<std::string, double> in = {{"n", static_cast<double>(n)}, {"k", static_cast<double>(k)}};
    BoundResult low = lower_at_zero(n, k);
    if (!low.applicable)
        return BoundResult::not_applicable(BoundKind::upper, low.reason, std::move(in));
    return BoundResult::ok(BoundKind::upper, 1.0 - low.raw, std::move(in));
}

/// P(X >= t) <= 1 − min{1, t/(α−t)}·(1 − 2k(n−k)/(n(n−1))) for t in (0, α).
inline BoundResult abs_dev_upper(long n, long k, double alpha, double t) {
    std::map<std::string, double> in = {{"n", static_cast<double>(n)},
                                        {"k", static_cast<double>(k)},
                                        {"alpha", alpha},
                                        {"t", t}};
    if (n < 2 || k < 1 || k > n - 1)
        return BoundResult::not_applicable(BoundKind::upper, "need 1 <= k <= n-1", std::move(in));
    if (!(alpha > 0))
        return BoundResult::not_applicable(BoundKind::upper, "alpha <= 0", std::move(in));
    if (!(t > 0) || !(t < alpha))
        return BoundResult::not_applicable(BoundKind::upper, "t outside (0, alpha)", std::move(in));
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    const double no_move = 1.0 - 2.0 * kd * (nd - kd) / (nd * (nd - 1.0));
    const double raw = 1.0 - std::min(1.0, t / (alpha - t)) * no_move;
    return BoundResult::ok(BoundKind::upper, raw, std::move(in));
}

/// P(X >= t) >= (2α/(α−t)) · k(n−k)/(n²(n−1)) − t/(2(α−t)) on the window
/// t in (0, 4k(n−k)α/(n²(n−1))).
inline BoundResult abs_dev_lower(long n, long k, double alpha, double t) {
    std::map<std::string, double> in = {{"n", static_cast<double>(n)},
                                        {"k", static_cast<double>(k)},
                                        {"alpha", alpha},
                                        {"t", t}};
    if (n < 2 || k < 1 || k > n - 1)
        return BoundResult::not_applicable(BoundKind::lower, "need 1 <= k <= n-1", std::move(in));
    if (!(alpha > 0))
        return BoundResult::not_applicable(BoundKind::lower, "alpha <= 0", std::move(in));
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    const double ratio = kd * (nd - kd) / (nd * nd * (nd - 1.0));
    if (!(t > 0) || !(t < 4.0 * ratio * alpha))
        return BoundResult::not_applicable(
            BoundKind::lower, "t outside (0, 4k(n-k)alpha/(n^2(n-1)))", std::move(in));
    const double raw = 2.0 * alpha / (alpha - t) * ratio - t / (2.0 * (alpha - t));
    return BoundResult::ok(BoundKind::lower, raw, std::move(in));
}

/// Serfling-style bound on the sample average:
/// P(A >= ε) <= exp(-2kε² / ((1 − k/n)(1 + 1/k)(b−a)²)).
inline BoundResult bm_serfling_upper(long n, long k, double a, double b, double eps) {
    std::map<std::string, double> in = {{"n", static_cast<double>(n)},
                                        {"k", static_cast<double>(k)},
                                        {"a", a},
                                        {"b", b},
                                        {"eps", eps}};
    if (n < 2 || k < 1 || k > n - 1)
        return BoundResult::not_applicable(BoundKind::upper, "need 1 <= k <= n-1", std::move(in));
    if (!(eps > 0)) return BoundResult::not_applicable(BoundKind::upper, "eps <= 0", std::move(in));
    if (!(b > a)) return BoundResult::not_applicable(BoundKind::upper, "b <= a", std::move(in));
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    const double denom = (1.0 - kd / nd) * (1.0 + 1.0 / kd) * (b - a) * (b - a);
    const double raw = std::exp(-2.0 * kd * eps * eps / denom);
    return BoundResult::ok(BoundKind::upper, raw, std::move(in));
}

/// Bernstein-style bound with an empirical-variance envelope:
/// P(A >= ε) <= exp(-(kε²/2) / (γ² + (2/3)(b−a)ε)) + δ, where
/// γ² = (1 − k/n)((k+1)/k·σ² + (n−k−1)/k·c) and
/// c = σ(b−a)·sqrt(2·ln(1/δ)/(n−k−1)). Needs k <= n−2 so c is defined.
inline BoundResult bm_bernstein_upper(long n, long k, double a, double b, double sigma2,
                                      double eps, double delta) {
    std::map<std::string, double> in = {{"n", static_cast<double>(n)},
                                        {"k", static_cast<double>(k)},
                                        {"a", a},
                                        {"b", b},
                                        {"sigma2", sigma2},
                                        {"eps", eps},
                                        {"delta", delta}};
    if (n < 3 || k < 1 || k > n - 2)
        return BoundResult::not_applicable(BoundKind::upper, "need 1 <= k <= n-2", std::move(in));
    if (!(eps > 0)) return BoundResult::not_applicable(BoundKind::upper, "eps <= 0", std::move(in));
    if (!(b > a)) return BoundResult::not_applicable(BoundKind::upper, "b <= a", std::move(in));
    if (!(sigma2 >= 0))
        return BoundResult::not_applicable(BoundKind::upper, "sigma2 < 0", std::move(in));
    if (!(delta > 0) || !(delta <= 1))
        return BoundResult::not_applicable(BoundKind::upper, "delta outside (0,1]", std::move(in));
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    const double sigma = std::sqrt(sigma2);
    const double c = sigma * (b - a) * std::sqrt(2.0 * std::log(1.0 / delta) / (nd - kd - 1.0));
    const double gamma2 =
        (1.0 - kd / nd) * ((kd + 1.0) / kd * sigma2 + (nd - kd - 1.0) / kd * c);
    const double raw =
        std::exp(-(kd * eps * eps / 2.0) / (gamma2 + (2.0 / 3.0) * (b - a) * eps)) + delta;
    return BoundResult::ok(BoundKind::upper, raw, std::move(in));
}

/// The piecewise-linear function below the step indicator 1{x > −y} on
/// [−1, 1]: f(x) = (x + y)/(1 − y) for x <= 1 − 2y, and 1 beyond.
inline double linear_minorant(double y, double x) {
    if (!(y > 0 && y < 1))
        throw DomainError("linear_minorant needs y in (0,1), got " + format_scalar(y));
    if (!(x >= -1 && x <= 1))
        throw DomainError("linear_minorant needs x in [-1,1], got " + format_scalar(x));
    return x <= 1.0 - 2.0 * y ? (x + y) / (1.0 - y) : 1.0;
}

/// The convex parabola below the step indicator 1{x >= y} on [−1, 1]:
/// f(x) = x²/(2(1−y)) + x/2 − y/(2(1−y)), pinned at f(−1) = f(y) = 0 and
/// f(1) = 1.
inline double quadratic_minorant(double y, double x) {
    if (!(y >= 0 && y < 1))
        throw DomainError("quadratic_minorant needs y in [0,1), got " + format_scalar(y));
    if (!(x >= -1 && x <= 1))
        throw DomainError("quadratic_minorant needs x in [-1,1], got " + format_scalar(x));
    return x * x / (2.0 * (1.0 - y)) + x / 2.0 - y / (2.0 * (1.0 - y));
}

/// Evaluates every bound in the BoundId enumeration on one population
/// summary. Bounds parameterized by an average threshold receive ε = t/k;
/// the zero-threshold bounds ignore t and speak about P(X > 0) / P(X >= 0).
inline std::vector<std::pair<BoundId, BoundResult>> evaluate_all(
    long n, long k, const PopulationStats<double>& st, double t, double delta) {
    const double eps = t / static_cast<double>(k);
    std::vector<std::pair<BoundId, BoundResult>> out;
    out.reserve(kAllBoundIds.size());
    out.emplace_back(BoundId::hoeffding, hoeffding_upper(k, st.a, st.b, t));
    out.emplace_back(BoundId::pokrovskiy, pokrovskiy_lower(BigInt(n), BigInt(k)));
    out.emplace_back(BoundId::lower_at_zero, lower_at_zero(n, k));
    out.emplace_back(BoundId::upper_at_zero, upper_at_zero(n, k));
    out.emplace_back(BoundId::abs_dev_upper, abs_dev_upper(n, k, st.alpha, t));
    out.emplace_back(BoundId::abs_dev_lower, abs_dev_lower(n, k, st.alpha, t));
    out.emplace_back(BoundId::bm_serfling, bm_serfling_upper(n, k, st.a, st.b, eps));
    out.emplace_back(BoundId::bm_bernstein,
                     bm_bernstein_upper(n, k, st.a, st.b, st.sigma2, eps, delta));
    return out;
}

} // namespace swor
