#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "swor/errors.hpp"
#include "swor/numeric.hpp"

namespace swor {

/// Relative tolerance on |Σx_i| in floating-point mode; exact mode demands 0.
inline constexpr double kZeroSumTolerance = 1e-12;

template <class S>
struct PopulationStats {
    S a;      ///< min x_i (≤ 0 for any zero-sum population)
    S b;      ///< max x_i (≥ 0)
    S sigma2; ///< (1/n) Σ x_i²
    S alpha;  ///< (1/2) Σ |x_i|
};

/// A zero-sum population of n ≥ 2 values. Immutable after construction; the
/// zero-sum invariant is checked exactly for rationals and to a relative
/// tolerance for doubles. Sampling k of its entries without replacement and
/// summing them induces the random variable the tail bounds speak about.
template <class S>
class Population {
  public:
    explicit Population(std::vector<S> values) : values_(std::move(values)) {
        if (values_.size() < 2)
            throw TooShortError("population needs at least 2 values, got " +
                                std::to_string(values_.size()));
        sum_ = scalar_traits<S>::from_int(0);
        abs_sum_ = scalar_traits<S>::from_int(0);
        for (const S& v : values_) {
            sum_ += v;
            abs_sum_ += scalar_traits<S>::abs(v);
        }
        if constexpr (scalar_traits<S>::is_exact) {
            if (sum_ != 0)
                throw ZeroSumViolation("population sum is " + format_scalar(sum_) +
                                       ", expected exactly 0");
        } else {
            const double scale = std::max(1.0, to_double(abs_sum_));
            if (std::fabs(to_double(sum_)) > kZeroSumTolerance * scale)
                throw ZeroSumViolation("population sum is " + format_scalar(sum_) +
                                       ", beyond tolerance " +
                                       format_scalar(kZeroSumTolerance * scale));
        }
    }

    const std::vector<S>& values() const { return values_; }
    long n() const { return static_cast<long>(values_.size()); }
    const S& sum() const { return sum_; }
    const S& abs_sum() const { return abs_sum_; }
    S alpha() const { return abs_sum_ / scalar_traits<S>::from_int(2); }

  private:
    std::vector<S> values_;
    S sum_;
    S abs_sum_;
};

template <class S>
Population<S> make_population(std::vector<S> values) {
    return Population<S>(std::move(values));
}

/// Shifts arbitrary data by its mean so the zero-sum invariant holds. In
/// floating point a second correction pass removes the accumulated rounding
/// residual, so centering stays well inside the constructor's tolerance.
template <class S>
Population<S> center(std::vector<S> values) {
    if (values.size() < 2)
        throw TooShortError("population needs at least 2 values, got " +
                            std::to_string(values.size()));
    const S n = scalar_traits<S>::from_int(static_cast<long long>(values.size()));
    for (int pass = 0; pass < (scalar_traits<S>::is_exact ? 1 : 2); ++pass) {
        S sum = scalar_traits<S>::from_int(0);
        for (const S& v : values) sum += v;
        const S mean = sum / n;
        for (S& v : values) v -= mean;
    }
    return Population<S>(std::move(values));
}

template <class S>
PopulationStats<S> stats(const Population<S>& p) {
    PopulationStats<S> st;
    st.a = p.values().front();
    st.b = p.values().front();
    S sq = scalar_traits<S>::from_int(0);
    for (const S& v : p.values()) {
        st.a = std::min(st.a, v);
        st.b = std::max(st.b, v);
        sq += v * v;
    }
    st.sigma2 = sq / scalar_traits<S>::from_int(p.n());
    st.alpha = p.alpha();
    return st;
}

inline PopulationStats<double> stats_as_double(const PopulationStats<double>& st) { return st; }

inline PopulationStats<double> stats_as_double(const PopulationStats<Rational>& st) {
    return {to_double(st.a), to_double(st.b), to_double(st.sigma2), to_double(st.alpha)};
}

/// Element-wise negation: same n, abs_sum and σ²; min and max swap signs.
template <class S>
Population<S> negate(const Population<S>& p) {
    std::vector<S> flipped;
    flipped.reserve(p.values().size());
    for (const S& v : p.values()) flipped.push_back(-v);
    return Population<S>(std::move(flipped));
}

} // namespace swor
