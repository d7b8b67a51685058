#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "swor/bounds.hpp"
#include "swor/errors.hpp"
#include "swor/exact_dist.hpp"
#include "swor/hypergeom.hpp"
#include "swor/majorization.hpp"
#include "swor/monte_carlo.hpp"
#include "swor/numeric.hpp"
#include "swor/population.hpp"

namespace swor {

/// Size caps and trial counts of the property suites. The defaults keep a
/// full run around half a minute while still sweeping every (n,i,k) cell the
/// inequalities are claimed for.
struct VerifyOptions {
    std::uint64_t seed = 1;
    long pmf_sum_max_n = 200;       ///< pmf sums to 1, float rows
    long pmf_sum_exact_max_n = 40;  ///< Vandermonde numerator sums, exact
    long mad_direct_max_n = 60;     ///< closed-form MAD vs direct summation
    long mad_exact_max_n = 40;      ///< same, big-integer identity
    long hypergeom_max_n = 200;     ///< mode bound + normalized-MAD sweeps
    long consistency_max_n = 14;    ///< closed-form laws vs enumeration
    long robbins_max_n = 300;
    long majorization_trials = 1000;
    long schur_pairs = 300;
    long bounds_trials = 500;
    long folklore_populations = 60;
    long mc_instances = 30;
    long long mc_reps = 100000;
};

struct VerifyFailure {
    std::string description;
};

struct VerifyReport {
    std::string suite;
    long long cases = 0;
    long long failure_count = 0;
    std::vector<VerifyFailure> failures; ///< first few reproducing inputs
    double wall_seconds = 0.0;

    bool passed() const { return failure_count == 0; }
};

namespace verify_detail {

inline constexpr std::size_t kMaxStoredFailures = 20;

class SuiteRun {
  public:
    explicit SuiteRun(std::string name) : start_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(name);
    }

    /// Registers one property evaluation; the description is only built on
    /// failure, so hot sweeps stay cheap.
    template <class F>
    void check(bool ok, F&& describe) {
        ++report_.cases;
        if (!ok) {
            ++report_.failure_count;
            if (report_.failures.size() < kMaxStoredFailures)
                report_.failures.push_back({describe()});
        }
    }

    VerifyReport finish() {
        report_.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

  private:
    VerifyReport report_;
    std::chrono::steady_clock::time_point start_;
};

/// Random centered population with Σ|x| = 2·alpha_target.
inline Population<double> random_population(SplitMix64& rng, long n, double alpha_target) {
    for (;;) {
        std::vector<double> v(static_cast<std::size_t>(n));
        for (double& x : v) x = 2.0 * rng.uniform() - 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            double sum = 0;
            for (double x : v) sum += x;
            const double mean = sum / static_cast<double>(n);
            for (double& x : v) x -= mean;
        }
        double abs_sum = 0;
        for (double x : v) abs_sum += std::fabs(x);
        if (abs_sum < 1e-3) continue; // essentially-degenerate draw; resample
        const double scale = alpha_target / (abs_sum / 2.0);
        for (double& x : v) x *= scale;
        return Population<double>(std::move(v));
    }
}

/// Random exactly-zero-sum rational population (shared small denominator).
inline Population<Rational> random_rational_population(SplitMix64& rng, long n) {
    for (;;) {
        const long long den = 1 + static_cast<long long>(rng.uniform_below(8));
        std::vector<Rational> v;
        v.reserve(static_cast<std::size_t>(n));
        long long sum = 0;
        bool any = false;
        for (long j = 0; j + 1 < n; ++j) {
            const long long z = static_cast<long long>(rng.uniform_below(41)) - 20;
            any = any || z != 0;
            sum += z;
            v.emplace_back(z, den);
        }
        if (!any && sum == 0) continue;
        v.emplace_back(-sum, den);
        return Population<Rational>(std::move(v));
    }
}

template <class S>
std::vector<S> shuffled(SplitMix64& rng, std::vector<S> v) {
    for (std::size_t j = v.size(); j > 1; --j)
        std::swap(v[j - 1], v[static_cast<std::size_t>(rng.uniform_below(j))]);
    return v;
}

inline std::string triple(long n, long i, long k) {
    return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " k=" + std::to_string(k);
}

template <class S>
std::string values_of(const Population<S>& p) {
    std::string s = "(";
    for (std::size_t j = 0; j < p.values().size(); ++j) {
        if (j) s += ", ";
        s += format_scalar(p.values()[j]);
    }
    return s + ")";
}

} // namespace verify_detail

/// Exact-pmf machinery: normalization, symmetry, the MAD closed form, the
/// complement identity, the mode-probability bound, the normalized-MAD lower
/// bound, Robbins brackets, and the closed-form laws against enumeration.
inline VerifyReport verify_hypergeom(const VerifyOptions& opts) {
    verify_detail::SuiteRun run("hypergeom");

    // pmf rows sum to 1 (float) and numerators sum to C(n,k) (exact).
    for (long n = 2; n <= opts.pmf_sum_max_n; ++n)
        for (long i = 1; i <= n - 1; ++i)
            for (long k = 1; k <= n - 1; ++k) {
                const HypergeomParams p(n, i, k);
                const std::vector<double> row = pmf_row(p);
                double sum = 0;
                for (double v : row) sum += v;
                run.check(std::fabs(sum - 1.0) <= 1e-12, [&] {
                    return "pmf sum != 1 at " + verify_detail::triple(n, i, k) +
                           ": sum=" + format_scalar(sum);
                });
            }
    for (long n = 2; n <= opts.pmf_sum_exact_max_n; ++n)
        for (long i = 1; i <= n - 1; ++i)
            for (long k = 1; k <= n - 1; ++k) {
                const HypergeomParams p(n, i, k);
                BigInt acc = 0;
                for (const BigInt& c : pmf_row_numerators(p)) acc += c;
                run.check(acc == binomial(n, k), [&] {
                    return "exact pmf numerators don't sum to C(n,k) at " +
                           verify_detail::triple(n, i, k);
                });
            }

    // Symmetry in (i,k) and the complement identity for the MAD. The two
    // numerator rows sit over different denominators (C(n,k) vs C(n,i)), so
    // equality of the pmfs is the cross-multiplied equality of the rows.
    for (long n = 2; n <= opts.mad_direct_max_n; ++n)
        for (long i = 1; i <= n - 1; ++i)
            for (long k = i; k <= n - 1; ++k) {
                const HypergeomParams p(n, i, k), q(n, k, i);
                bool ok = p.support_min() == q.support_min() &&
                          p.support_max() == q.support_max();
                if (ok) {
                    const std::vector<BigInt> np = pmf_row_numerators(p);
                    const std::vector<BigInt> nq = pmf_row_numerators(q);
                    const BigInt dp = binomial(n, k), dq = binomial(n, i);
                    for (std::size_t m = 0; ok && m < np.size(); ++m)
                        ok = np[m] * dq == nq[m] * dp;
                }
                run.check(ok, [&] {
                    return "pmf(i,k) != pmf(k,i) at " + verify_detail::triple(n, i, k);
                });
            }
    for (long n = 2; n <= opts.mad_direct_max_n; ++n)
        for (long i = 1; i <= n - 1; ++i)
            for (long k = 1; k <= n - 1; ++k) {
                const HypergeomParams p(n, i, k);
                run.check(mad_exact<Rational>(p) == mad_exact<Rational>(complement(p)), [&] {
                    return "MAD changed under complement at " + verify_detail::triple(n, i, k);
                });
            }

    // Closed-form MAD against direct summation: exact integer identity
    // Σ|jn−ik|·C(i,j)·C(n−i,k−j) = 2m(n−i−k+m)·C(i,m)·C(n−i,k−m), then the
    // float evaluation path against the ratio-recurrence row.
    for (long n = 2; n <= opts.mad_exact_max_n; ++n)
        for (long i = 1; i <= n - 1; ++i)
            for (long k = 1; k <= n - 1; ++k) {
                const HypergeomParams p(n, i, k);
                const long m = p.mean_ceil();
                BigInt direct = 0;
                long j = p.support_min();
                for (const BigInt& c : pmf_row_numerators(p)) {
                    const long long dev = std::llabs(j * n - i * k);
                    direct += dev * c;
                    ++j;
                }
                const BigInt closed = BigInt(2) * m * (n - i - k + m) * binomial(i, m) *
                                      binomial(n - i, k - m);
                run.check(direct == closed, [&] {
                    return "exact MAD identity failed at " + verify_detail::triple(n, i, k);
                });
            }
    for (long n = 2; n <= opts.mad_direct_max_n; ++n)
        for (long i = 1; i <= n - 1; ++i)
            for (long k = 1; k <= n - 1; ++k) {
                const HypergeomParams p(n, i, k);
                const std::vector<double> row = pmf_row(p);
                const double mu = static_cast<double>(i) * k / n;
                double direct = 0;
                for (long m = p.support_min(); m <= p.support_max(); ++m)
                    direct += std::fabs(static_cast<double>(m) - mu) *
                              row[static_cast<std::size_t>(m - p.support_min())];
                const double closed = mad_exact<double>(p);
                run.check(std::fabs(direct - closed) <= 1e-10 * std::max(direct, 1e-30), [&] {
                    return "float MAD mismatch at " + verify_detail::triple(n, i, k) +
                           ": direct=" + format_scalar(direct) +
                           " closed=" + format_scalar(closed);
                });
            }

    // Mode-probability lower bound wherever its gate opens.
    for (long n = 2; n <= opts.hypergeom_max_n; ++n)
        for (long i = 1; i <= n - 1; ++i)
            for (long k = 1; k <= n - 1; ++k) {
                const HypergeomParams p(n, i, k);
                const BoundResult b = pmf_mode_lower_bound(p);
                if (!b.applicable) continue;
                const double mode_pmf = pmf<double>(p, p.mean_ceil());
                run.check(mode_pmf >= b.value, [&] {
                    return "mode pmf below bound at " + verify_detail::triple(n, i, k) +
                           ": pmf=" + format_scalar(mode_pmf) +
                           " bound=" + format_scalar(b.value);
                });
            }

    // Normalized MAD dominates its uniform-in-i lower bound. When ik < n the
    // mean sits below 1 and two sharper closed forms hold, one per side of
    // ik = n/2. (The single form k/(2n) does NOT hold across all of ik < n:
    // Hyp(4,1,3) has normalized MAD 1/4 < 3/8.)
    for (long n = 2; n <= opts.hypergeom_max_n; ++n)
        for (long i = 1; i <= n - 1; ++i)
            for (long k = 1; k <= n - 1; ++k) {
                const HypergeomParams p(n, i, k);
                const double nm = normalized_mad<double>(p);
                const double lb = mad_normalized_lower_bound(n, k);
                run.check(nm >= lb, [&] {
                    return "normalized MAD below bound at " + verify_detail::triple(n, i, k) +
                           ": nmad=" + format_scalar(nm) + " bound=" + format_scalar(lb);
                });
                if (2 * i * k <= n) {
                    const double sharp = 0.5 * static_cast<double>(k) / (n - i);
                    run.check(nm >= sharp * (1.0 - 1e-9), [&] {
                        return "normalized MAD below k/(2(n-i)) at " +
                               verify_detail::triple(n, i, k) + ": nmad=" + format_scalar(nm);
                    });
                } else if (i * k < n) {
                    const double sharp = static_cast<double>(n - i * k) /
                                         (2.0 * i * (n - i));
                    run.check(nm >= sharp * (1.0 - 1e-9), [&] {
                        return "normalized MAD below (n-ik)/(2i(n-i)) at " +
                               verify_detail::triple(n, i, k) + ": nmad=" + format_scalar(nm);
                    });
                }
            }

    // Robbins brackets contain ln(n!).
    {
        long double lnfact = 0.0L;
        for (long n = 1; n <= opts.robbins_max_n; ++n) {
            lnfact += std::log(static_cast<long double>(n));
            const StirlingBracket b = robbins_bounds(n);
            run.check(b.lower < static_cast<double>(lnfact) &&
                          static_cast<double>(lnfact) < b.upper,
                      [&] {
                          return "Robbins bracket misses ln(n!) at n=" + std::to_string(n);
                      });
        }
    }

    // Median equals the mean when ik/n is an integer.
    for (long n = 2; n <= opts.mad_direct_max_n; ++n)
        for (long i = 1; i <= n - 1; ++i)
            for (long k = 1; k <= n - 1; ++k) {
                if ((i * k) % n != 0) continue;
                const HypergeomParams p(n, i, k);
                const long mu = i * k / n;
                const Rational at_most = cdf<Rational>(p, mu);
                const Rational at_least =
                    Rational(1) - (mu > p.support_min() ? cdf<Rational>(p, mu - 1) : Rational(0));
                run.check(at_most >= Rational(1, 2) && at_least >= Rational(1, 2), [&] {
                    return "median != mean at " + verify_detail::triple(n, i, k);
                });
            }

    // Closed-form two-block and extreme laws agree with brute enumeration.
    for (long n = 2; n <= opts.consistency_max_n; ++n) {
        for (long i = 1; i <= n - 1; ++i) {
            std::vector<Rational> values(static_cast<std::size_t>(n));
            std::fill(values.begin(), values.begin() + i, Rational(1, i));
            std::fill(values.begin() + i, values.end(), Rational(-1, n - i));
            const Population<Rational> p(std::move(values));
            for (long k = 1; k <= n - 1; ++k) {
                const auto enumerated = exact_distribution(p, k);
                const auto closed = two_block_distribution<Rational>(n, i, k, Rational(1));
                run.check(enumerated.support == closed.support &&
                              enumerated.counts == closed.counts &&
                              enumerated.denominator == closed.denominator,
                          [&] {
                              return "two-block law != enumeration at " +
                                     verify_detail::triple(n, i, k);
                          });
                // E|X| of the two-block law equals (αn/(i(n−i)))·MAD.
                const Rational scale =
                    Rational(n, static_cast<long long>(i) * (n - i));
                run.check(expected_abs(closed) ==
                              scale * mad_exact<Rational>(HypergeomParams(n, i, k)),
                          [&] {
                              return "two-block E|X| != scaled MAD at " +
                                     verify_detail::triple(n, i, k);
                          });
            }
        }
        const Population<Rational> star = extreme_population<Rational>(n, Rational(1));
        for (long k = 1; k <= n - 1; ++k) {
            const auto enumerated = exact_distribution(star, k);
            const auto closed = extreme_distribution<Rational>(n, k, Rational(1));
            run.check(enumerated.support == closed.support &&
                          enumerated.counts == closed.counts,
                      [&] {
                          return "extreme law != enumeration at n=" + std::to_string(n) +
                                 " k=" + std::to_string(k);
                      });
        }
    }

    return run.finish();
}

/// Majorization order: reflexivity, permutation invariance, the two-block
/// certificate, domination by the extreme vector, and transfer monotonicity.
inline VerifyReport verify_majorization(const VerifyOptions& opts) {
    verify_detail::SuiteRun run("majorization");
    SplitMix64 rng(opts.seed);

    for (long trial = 0; trial < opts.majorization_trials; ++trial) {
        const long n = 2 + static_cast<long>(rng.uniform_below(29)); // n <= 30
        const double alpha = 0.01 + 9.99 * rng.uniform();            // (0, 10]
        const Population<double> p = verify_detail::random_population(rng, n, alpha);
        const std::vector<double>& v = p.values();

        run.check(is_majorized_by(v, v), [&] {
            return "reflexivity failed for " + verify_detail::values_of(p);
        });

        const std::vector<double> w = verify_detail::shuffled(rng, v);
        const Population<double> star = extreme_population(n, p.alpha());
        run.check(is_majorized_by(w, star.values()) && is_majorized_by(v, star.values()),
                  [&] {
                      return "extreme vector fails to dominate " + verify_detail::values_of(p);
                  });
        run.check(is_majorized_by(w, v) && is_majorized_by(v, w), [&] {
            return "permutation changed the relation for " + verify_detail::values_of(p);
        });

        const MajorizationCertificate<double> cert = minimal_population(p);
        bool trace_ok = cert.index_i >= 1 && cert.index_i <= n - 1;
        const double tol = kMajorizationTolerance * std::max(p.alpha(), 1e-300);
        for (std::size_t j = 0; trace_ok && j < cert.prefix_trace.size(); ++j) {
            const auto& step = cert.prefix_trace[j];
            if (j + 1 < cert.prefix_trace.size())
                trace_ok = step.dominated_prefix <= step.dominating_prefix + tol;
            else
                trace_ok = std::fabs(step.dominated_prefix - step.dominating_prefix) <= tol;
        }
        run.check(trace_ok && is_majorized_by(cert.minimal_vector.values(), v), [&] {
            return "two-block certificate invalid for " + verify_detail::values_of(p) +
                   " (i=" + std::to_string(cert.index_i) + ")";
        });

        // Robin Hood transfer from the largest to the smallest entry.
        const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
        const double gap = *mx - *mn;
        if (gap > 1e-9) {
            const double eps = (0.05 + 0.95 * rng.uniform()) * gap / 2.0;
            const Population<double> moved = robin_hood_transfer(
                p, static_cast<std::size_t>(mx - v.begin()),
                static_cast<std::size_t>(mn - v.begin()), eps);
            run.check(is_majorized_by(moved.values(), v), [&] {
                return "transfer output not majorized by input for " +
                       verify_detail::values_of(p) + " eps=" + format_scalar(eps);
            });
        }

        // Every tenth trial repeats the certificate checks in exact mode.
        if (trial % 10 == 0) {
            const Population<Rational> q =
                verify_detail::random_rational_population(rng, std::max(n / 2, 2L));
            if (q.alpha() > 0) {
                const auto qcert = minimal_population(q);
                run.check(is_majorized_by(qcert.minimal_vector.values(), q.values()), [&] {
                    return "exact-mode certificate invalid for " + verify_detail::values_of(q);
                });
                run.check(is_majorized_by(q.values(),
                                          extreme_population<Rational>(q.n(), q.alpha()).values()),
                          [&] {
                              return "exact-mode extreme domination failed for " +
                                     verify_detail::values_of(q);
                          });
            }
        }
    }

    return run.finish();
}

/// Monotonicity of expectations along the majorization order: E|X| is
/// Schur-convex, and E g(X) is monotone for every convex g in the test family.
inline VerifyReport verify_schur(const VerifyOptions& opts) {
    verify_detail::SuiteRun run("schur");
    SplitMix64 rng(opts.seed + 0x5c4u);

    for (long pair = 0; pair < opts.schur_pairs; ++pair) {
        const long n = 3 + static_cast<long>(rng.uniform_below(10)); // n <= 12
        const double alpha = 0.5 + 1.5 * rng.uniform();
        const Population<double> big = verify_detail::random_population(rng, n, alpha);
        const std::vector<double>& v = big.values();

        Population<double> small = [&] {
            if (pair % 2 == 0) return minimal_population(big).minimal_vector;
            const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
            const double eps = (0.05 + 0.95 * rng.uniform()) * (*mx - *mn) / 2.0;
            return robin_hood_transfer(big, static_cast<std::size_t>(mx - v.begin()),
                                       static_cast<std::size_t>(mn - v.begin()), eps);
        }();

        const double slack = 1e-9 * alpha;
        for (long k = 1; k <= n - 1; ++k) {
            const auto d_small = exact_distribution(small, k);
            const auto d_big = exact_distribution(big, k);

            const double abs_small = expected_abs(d_small), abs_big = expected_abs(d_big);
            run.check(abs_small <= abs_big + slack, [&] {
                return "E|X| not Schur-convex: k=" + std::to_string(k) + " small=" +
                       verify_detail::values_of(small) + " big=" + verify_detail::values_of(big) +
                       " E|small|=" + format_scalar(abs_small) +
                       " E|big|=" + format_scalar(abs_big);
            });

            const auto expect = [](const DiscreteDistribution<double>& d, auto&& g) {
                double acc = 0;
                for (std::size_t j = 0; j < d.size(); ++j)
                    acc += g(d.support[j]) * d.probability(j);
                return acc;
            };
            const double a = to_double(big.alpha());
            const std::pair<const char*, std::function<double(double)>> family[] = {
                {"x^2", [](double x) { return x * x; }},
                {"hinge(-0.5)", [](double x) { return std::max(0.0, x + 0.5); }},
                {"hinge(0)", [](double x) { return std::max(0.0, x); }},
                {"hinge(0.5)", [](double x) { return std::max(0.0, x - 0.5); }},
                {"quadratic_minorant(0.25, x/alpha)",
                 [a](double x) {
                     return quadratic_minorant(0.25, std::clamp(x / a, -1.0, 1.0));
                 }},
            };
            for (const auto& [label, g] : family) {
                const double lhs = expect(d_small, g), rhs = expect(d_big, g);
                run.check(lhs <= rhs + slack, [&] {
                    return std::string("convex order violated for g=") + label +
                           ": k=" + std::to_string(k) + " small=" +
                           verify_detail::values_of(small) +
                           " big=" + verify_detail::values_of(big) +
                           " lhs=" + format_scalar(lhs) + " rhs=" + format_scalar(rhs);
                });
            }
        }
    }

    return run.finish();
}

/// Tail-bound soundness against enumerated ground truth, shape properties of
/// the absolute-deviation bound, and the minorant mechanism behind the
/// lower/upper bound proofs.
inline VerifyReport verify_bounds(const VerifyOptions& opts) {
    verify_detail::SuiteRun run("bounds");
    SplitMix64 rng(opts.seed + 0xb0u);

    for (long trial = 0; trial < opts.bounds_trials; ++trial) {
        const long n = 2 + static_cast<long>(rng.uniform_below(13)); // n <= 14
        const double alpha = 0.5 + 1.5 * rng.uniform();
        const Population<double> p = verify_detail::random_population(rng, n, alpha);
        const long k = 1 + static_cast<long>(rng.uniform_below(static_cast<std::uint64_t>(n - 1)));
        const auto d = exact_distribution(p, k);
        const PopulationStats<double> st = stats(p);

        const auto ctx = [&] {
            return " pop=" + verify_detail::values_of(p) + " k=" + std::to_string(k);
        };

        const double tail_pos = tail_probability(d, 0.0, true);
        const double tail_nonneg = tail_probability(d, 0.0, false);
        const BoundResult lo0 = lower_at_zero(n, k);
        const BoundResult up0 = upper_at_zero(n, k);
        run.check(lo0.applicable && lo0.value <= tail_pos + 1e-12, [&] {
            return "lower_at_zero above P(X>0):" + ctx() + " bound=" + format_scalar(lo0.value) +
                   " tail=" + format_scalar(tail_pos);
        });
        run.check(up0.applicable && up0.value >= tail_nonneg - 1e-12, [&] {
            return "upper_at_zero below P(X>=0):" + ctx() + " bound=" + format_scalar(up0.value) +
                   " tail=" + format_scalar(tail_nonneg);
        });
        run.check(!pokrovskiy_lower(BigInt(n), BigInt(k)).applicable, [&] {
            return "pokrovskiy gate opened at desk scale:" + ctx();
        });

        // Hoeffding and the sample-average bounds at a random positive t.
        {
            const double t = (0.05 + 1.15 * rng.uniform()) * alpha;
            const double tail = tail_probability(d, t, false);
            const BoundResult h = hoeffding_upper(k, st.a, st.b, t);
            run.check(h.applicable && h.value >= tail - 1e-12, [&] {
                return "hoeffding below exact tail:" + ctx() + " t=" + format_scalar(t) +
                       " bound=" + format_scalar(h.value) + " tail=" + format_scalar(tail);
            });
            const double eps = t / static_cast<double>(k);
            const BoundResult s = bm_serfling_upper(n, k, st.a, st.b, eps);
            run.check(s.applicable && s.value >= tail - 1e-12, [&] {
                return "bm_serfling below exact tail:" + ctx() + " eps=" + format_scalar(eps) +
                       " bound=" + format_scalar(s.value) + " tail=" + format_scalar(tail);
            });
            const BoundResult bb = bm_bernstein_upper(n, k, st.a, st.b, st.sigma2, eps, 0.05);
            if (k <= n - 2)
                run.check(bb.applicable && bb.value >= tail - 1e-12, [&] {
                    return "bm_bernstein below exact tail:" + ctx() +
                           " eps=" + format_scalar(eps) + " bound=" + format_scalar(bb.value) +
                           " tail=" + format_scalar(tail);
                });
            else
                run.check(!bb.applicable, [&] {
                    return "bm_bernstein applicable at k=n-1:" + ctx();
                });
        }

        // Absolute-deviation pair on the window where both sides apply.
        {
            const double nd = static_cast<double>(n), kd = static_cast<double>(k);
            const double window = 4.0 * kd * (nd - kd) / (nd * nd * (nd - 1.0)) * alpha;
            const double t = (0.02 + 0.96 * rng.uniform()) * window;
            const double tail = tail_probability(d, t, false);
            const BoundResult up = abs_dev_upper(n, k, alpha, t);
            const BoundResult lo = abs_dev_lower(n, k, alpha, t);
            run.check(up.applicable && up.value >= tail - 1e-12, [&] {
                return "abs_dev_upper below exact tail:" + ctx() + " t=" + format_scalar(t) +
                       " bound=" + format_scalar(up.value) + " tail=" + format_scalar(tail);
            });
            run.check(lo.applicable && lo.value <= tail + 1e-12, [&] {
                return "abs_dev_lower above exact tail:" + ctx() + " t=" + format_scalar(t) +
                       " bound=" + format_scalar(lo.value) + " tail=" + format_scalar(tail);
            });
        }
    }

    // abs_dev_upper is non-increasing in t and flat on [α/2, α).
    for (long n : {3L, 4L, 10L, 37L, 100L})
        for (long k = 1; k <= n - 1; k += std::max(1L, (n - 1) / 7)) {
            const double alpha = 1.25;
            double prev = 2.0;
            for (int j = 1; j <= 31; ++j) {
                const double t = alpha * j / 32.0;
                const BoundResult b = abs_dev_upper(n, k, alpha, t);
                run.check(b.applicable && b.raw <= prev + 1e-12, [&] {
                    return "abs_dev_upper increased in t at n=" + std::to_string(n) +
                           " k=" + std::to_string(k) + " t=" + format_scalar(t);
                });
                prev = b.raw;
            }
            const double flat_ref = abs_dev_upper(n, k, alpha, alpha / 2.0).raw;
            for (double u : {0.55, 0.7, 0.9, 0.99}) {
                const double val = abs_dev_upper(n, k, alpha, alpha * u).raw;
                run.check(std::fabs(val - flat_ref) <= 1e-12, [&] {
                    return "abs_dev_upper not constant on [alpha/2, alpha) at n=" +
                           std::to_string(n) + " k=" + std::to_string(k) +
                           " u=" + format_scalar(u);
                });
            }
        }

    // The extreme three-point law never exceeds the bound, and the bound
    // matches its defining expression.
    {
        SplitMix64 trng(opts.seed + 0xe7u);
        for (long n = 2; n <= 12; ++n)
            for (long k = 1; k <= n - 1; ++k) {
                const double alpha = 0.5 + 1.5 * trng.uniform();
                const auto star = extreme_distribution<double>(n, k, alpha);
                const double t = (0.02 + 0.96 * trng.uniform()) * alpha;
                const BoundResult b = abs_dev_upper(n, k, alpha, t);
                const double tail = tail_probability(star, t, false);
                run.check(b.applicable && tail <= b.value + 1e-12, [&] {
                    return "extreme law exceeds abs_dev_upper at n=" + std::to_string(n) +
                           " k=" + std::to_string(k) + " t=" + format_scalar(t);
                });
                const double nd = static_cast<double>(n), kd = static_cast<double>(k);
                const double expected =
                    1.0 - std::min(1.0, t / (alpha - t)) *
                              (1.0 - 2.0 * kd * (nd - kd) / (nd * (nd - 1.0)));
                run.check(b.raw == expected, [&] {
                    return "abs_dev_upper raw deviates from its formula at n=" +
                           std::to_string(n) + " k=" + std::to_string(k);
                });
            }
    }

    // lower_at_zero never exceeds the normalized MAD, for every block size i.
    for (long n = 2; n <= 100; ++n)
        for (long k = 1; k <= n - 1; ++k) {
            const double lb = lower_at_zero(n, k).raw;
            for (long i = 1; i <= n - 1; ++i) {
                const double nm = normalized_mad<double>(HypergeomParams(n, i, k));
                run.check(lb <= nm, [&] {
                    return "lower_at_zero above normalized MAD at " +
                           verify_detail::triple(n, i, k);
                });
            }
        }

    // Minorants stay below their indicators pointwise...
    for (int yi = 1; yi <= 9; ++yi) {
        const double y = yi / 10.0;
        for (int xi = 0; xi <= 200; ++xi) {
            const double x = -1.0 + xi / 100.0;
            const double lin = linear_minorant(y, x);
            run.check((x > -y ? 1.0 : 0.0) >= lin - 1e-12, [&] {
                return "linear minorant above indicator at y=" + format_scalar(y) +
                       " x=" + format_scalar(x);
            });
            const double quad = quadratic_minorant(y, x);
            run.check((x >= y ? 1.0 : 0.0) >= quad - 1e-12, [&] {
                return "quadratic minorant above indicator at y=" + format_scalar(y) +
                       " x=" + format_scalar(x);
            });
        }
        run.check(std::fabs(linear_minorant(y, -y)) <= 1e-12 &&
                      std::fabs(linear_minorant(y, 1.0 - 2.0 * y) - 1.0) <= 1e-12,
                  [&] { return "linear minorant pin violated at y=" + format_scalar(y); });
        run.check(std::fabs(quadratic_minorant(y, -1.0)) <= 1e-12 &&
                      std::fabs(quadratic_minorant(y, y)) <= 1e-12 &&
                      std::fabs(quadratic_minorant(y, 1.0) - 1.0) <= 1e-12,
                  [&] { return "quadratic minorant pins violated at y=" + format_scalar(y); });
    }

    // ...and taking expectations under rescaled laws reproduces the proof
    // mechanism: E f(Y) lower-bounds the corresponding tail.
    {
        SplitMix64 mrng(opts.seed + 0x31u);
        for (long trial = 0; trial < 60; ++trial) {
            const long n = 3 + static_cast<long>(mrng.uniform_below(10));
            const long i = 1 + static_cast<long>(mrng.uniform_below(static_cast<std::uint64_t>(n - 1)));
            const long k = 1 + static_cast<long>(mrng.uniform_below(static_cast<std::uint64_t>(n - 1)));
            const double alpha = 0.5 + 1.5 * mrng.uniform();
            const auto d = (trial % 3 == 0)
                               ? extreme_distribution<double>(n, k, alpha)
                               : two_block_distribution<double>(n, i, k, alpha);
            const double y = 0.05 + 0.9 * mrng.uniform();
            double e_lin = 0, e_quad = 0;
            for (std::size_t j = 0; j < d.size(); ++j) {
                const double x = std::clamp(d.support[j] / alpha, -1.0, 1.0);
                e_lin += linear_minorant(y, x) * d.probability(j);
                e_quad += quadratic_minorant(y, x) * d.probability(j);
            }
            const double tail_lin = tail_probability(d, -y * alpha, true);
            const double tail_quad = tail_probability(d, y * alpha, false);
            run.check(e_lin <= tail_lin + 1e-12, [&] {
                return "E linear_minorant above P(Y > -y) at " + verify_detail::triple(n, i, k) +
                       " y=" + format_scalar(y);
            });
            run.check(e_quad <= tail_quad + 1e-12, [&] {
                return "E quadratic_minorant above P(Y >= y) at " +
                       verify_detail::triple(n, i, k) + " y=" + format_scalar(y);
            });

            // Quadratic-minorant expectation, twice: atom summation vs the
            // closed form through the hypergeometric variance.
            if (trial % 3 != 0) {
                const double t = y * alpha;
                const double scale = alpha * n / (static_cast<double>(i) * (n - i));
                const double ex2 =
                    scale * scale * variance<double>(HypergeomParams(n, i, k));
                const double closed =
                    alpha / (2.0 * (alpha - t)) * (ex2 / (alpha * alpha)) -
                    t / (2.0 * (alpha - t));
                run.check(std::fabs(e_quad - closed) <= 1e-10, [&] {
                    return "quadratic-minorant expectation disagrees with closed form at " +
                           verify_detail::triple(n, i, k) + " t=" + format_scalar(t) +
                           ": direct=" + format_scalar(e_quad) +
                           " closed=" + format_scalar(closed);
                });
            }
        }
    }

    return run.finish();
}

/// The balance identities of centered sums — E(X⁺) = E(X⁻), the conditional
/// mean cap, the exactly-zero folklore residual — plus Monte Carlo
/// calibration against enumerated tails.
inline VerifyReport verify_folklore(const VerifyOptions& opts) {
    verify_detail::SuiteRun run("folklore");
    SplitMix64 rng(opts.seed + 0xf01u);

    for (long trial = 0; trial < opts.folklore_populations; ++trial) {
        const long n = 2 + static_cast<long>(rng.uniform_below(11)); // n <= 12
        const Population<Rational> p = verify_detail::random_rational_population(rng, n);
        const Rational alpha = p.alpha();
        for (long k = 1; k <= n - 1; ++k) {
            const auto d = exact_distribution(p, k);
            run.check(expected_value(d) == 0, [&] {
                return "E(X) != 0 for " + verify_detail::values_of(p) + " k=" + std::to_string(k);
            });
            PositivePartReport<Rational> r{};
            try {
                r = positive_part_identities(d);
            } catch (const NoPositiveMassError&) {
                run.check(!(alpha > 0), [&] {
                    return "no positive mass despite alpha > 0 for " +
                           verify_detail::values_of(p) + " k=" + std::to_string(k);
                });
                continue;
            }
            run.check(r.e_plus == r.e_minus, [&] {
                return "E(X+) != E(X-) for " + verify_detail::values_of(p) +
                       " k=" + std::to_string(k);
            });
            run.check(r.cond_mean_pos <= alpha, [&] {
                return "E(X | X>0) > alpha for " + verify_detail::values_of(p) +
                       " k=" + std::to_string(k);
            });
            run.check(r.folklore_residual == 0, [&] {
                return "folklore residual nonzero for " + verify_detail::values_of(p) +
                       " k=" + std::to_string(k) + ": " + format_scalar(r.folklore_residual);
            });
        }
    }

    // Float-mode residual stays within grouping noise.
    for (long trial = 0; trial < opts.folklore_populations / 2; ++trial) {
        const long n = 2 + static_cast<long>(rng.uniform_below(11));
        const Population<double> p =
            verify_detail::random_population(rng, n, 0.5 + 1.5 * rng.uniform());
        for (long k = 1; k <= n - 1; ++k) {
            const auto d = exact_distribution(p, k);
            const auto r = positive_part_identities(d);
            run.check(std::fabs(r.folklore_residual) <= 1e-10, [&] {
                return "float folklore residual too large for " + verify_detail::values_of(p) +
                       " k=" + std::to_string(k) + ": " + format_scalar(r.folklore_residual);
            });
        }
    }

    // Monte Carlo calibration: nearly all instances land within 5 standard
    // errors of the enumerated tail, and reruns are bit-identical.
    {
        long within = 0;
        for (long inst = 0; inst < opts.mc_instances; ++inst) {
            const long n = 8 + static_cast<long>(rng.uniform_below(7)); // [8,14]
            const Population<double> p =
                verify_detail::random_population(rng, n, 0.5 + 1.5 * rng.uniform());
            const long k =
                1 + static_cast<long>(rng.uniform_below(static_cast<std::uint64_t>(n - 1)));
            const auto d = exact_distribution(p, k);
            // A threshold between two atoms, at a quantile away from 0 and 1.
            const double u = 0.2 + 0.6 * rng.uniform();
            BigInt acc = 0;
            std::size_t cut = 0;
            for (; cut + 1 < d.size(); ++cut) {
                acc += d.counts[cut];
                if (to_double(acc) / to_double(d.denominator) >= u) break;
            }
            const double t = cut + 1 < d.size()
                                 ? (d.support[cut] + d.support[cut + 1]) / 2.0
                                 : d.support[cut] - d.atom_tol * 2.0;
            const bool strict = rng.next() & 1u;
            const double exact = tail_probability(d, t, strict);
            const std::uint64_t seed = opts.seed * 1000003u + static_cast<std::uint64_t>(inst);
            const MCEstimate est = mc_tail(p, k, t, strict, opts.mc_reps, seed);
            const MCEstimate rerun = mc_tail(p, k, t, strict, opts.mc_reps, seed);
            run.check(est.estimate == rerun.estimate, [&] {
                return "mc_tail not deterministic for seed " + std::to_string(seed);
            });
            if (std::fabs(est.estimate - exact) <= 5.0 * est.std_error + 1e-15) ++within;
        }
        run.check(within >= opts.mc_instances - 1, [&] {
            return "Monte Carlo calibration: only " + std::to_string(within) + " of " +
                   std::to_string(opts.mc_instances) + " instances within 5 standard errors";
        });
    }

    return run.finish();
}

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"hypergeom", "majorization", "schur",
                                                   "bounds", "folklore"};
    return names;
}

/// Runs one named suite, or all of them. Unknown names are a domain error so
/// callers can distinguish usage mistakes from property failures.
inline std::vector<VerifyReport> run_suites(const std::string& name, const VerifyOptions& opts) {
    const auto one = [&](const std::string& suite) -> VerifyReport {
        if (suite == "hypergeom") return verify_hypergeom(opts);
        if (suite == "majorization") return verify_majorization(opts);
        if (suite == "schur") return verify_schur(opts);
        if (suite == "bounds") return verify_bounds(opts);
        if (suite == "folklore") return verify_folklore(opts);
        throw DomainError("unknown verify suite: " + suite);
    };
    std::vector<VerifyReport> reports;
    if (name == "all") {
        for (const std::string& suite : verify_suite_names()) reports.push_back(one(suite));
    } else {
        reports.push_back(one(name));
    }
    return reports;
}

} // namespace swor
