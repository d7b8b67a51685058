#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "swor/exact_dist.hpp"
#include "swor/majorization.hpp"
#include "swor/monte_carlo.hpp"

using namespace swor;

namespace {

const Population<Rational> kOneThirds(
    {Rational(1), Rational(-1, 3), Rational(-1, 3), Rational(-1, 3)});
const Population<double> kFourPoint({1.0, 0.0, 0.0, -1.0});

} // namespace

TEST_CASE("exact distribution by enumeration") {
    SECTION("(1, -1/3, -1/3, -1/3) choose 2") {
        const auto d = exact_distribution(kOneThirds, 2);
        REQUIRE(d.size() == 2);
        CHECK(d.support == std::vector<Rational>{Rational(-2, 3), Rational(2, 3)});
        CHECK(d.counts == std::vector<BigInt>{3, 3});
        CHECK(d.denominator == 6);
        CHECK(d.probability(0) == Rational(1, 2));
    }
    SECTION("(1, -1) choose 1") {
        const auto d = exact_distribution(Population<Rational>({Rational(1), Rational(-1)}), 1);
        CHECK(d.support == std::vector<Rational>{Rational(-1), Rational(1)});
        CHECK(d.counts == std::vector<BigInt>{1, 1});
    }
    SECTION("(1, 0, 0, -1) choose 2, float mode") {
        const auto d = exact_distribution(kFourPoint, 2);
        REQUIRE(d.size() == 3);
        CHECK(d.support[0] == Catch::Approx(-1.0).margin(1e-12));
        CHECK(d.support[1] == Catch::Approx(0.0).margin(1e-12));
        CHECK(d.support[2] == Catch::Approx(1.0).margin(1e-12));
        CHECK(d.counts == std::vector<BigInt>{2, 2, 2});
        CHECK(d.probability(1) == Catch::Approx(1.0 / 3).epsilon(1e-14));
    }
    SECTION("k bounds") {
        CHECK_THROWS_AS(exact_distribution(kFourPoint, 0), DomainError);
        CHECK_THROWS_AS(exact_distribution(kFourPoint, 4), DomainError);
    }
    SECTION("budget gates") {
        std::vector<double> big(26, 0.0);
        big[0] = 1.0;
        big[25] = -1.0;
        CHECK_THROWS_AS(exact_distribution(Population<double>(std::move(big)), 2),
                        BudgetExceededError);

        std::vector<double> forty(40, 0.0);
        forty[0] = 1.0;
        forty[39] = -1.0;
        EnumerationLimits wide;
        wide.max_n = 40; // C(40,20) still blows the subset budget
        CHECK_THROWS_AS(exact_distribution(Population<double>(std::move(forty)), 20, wide),
                        BudgetExceededError);
    }
    SECTION("matches the recursive reference on random-ish populations") {
        const Population<Rational> p({Rational(5, 4), Rational(1, 2), Rational(-1, 4),
                                      Rational(-3, 4), Rational(-3, 4)});
        for (long k = 1; k <= 4; ++k) {
            const auto d = exact_distribution(p, k);
            const auto ref = oracle::subset_sum_counts(p.values(), k);
            REQUIRE(d.size() == ref.size());
            std::size_t j = 0;
            for (const auto& [value, count] : ref) {
                CHECK(d.support[j] == value);
                CHECK(d.counts[j] == count);
                ++j;
            }
        }
    }
    SECTION("float grouping merges noise-level splits only") {
        // 0.1+0.2 and 0.3 differ by 5.6e-17; they must land in one atom.
        const Population<double> p = center<double>({0.1, 0.2, 0.3, 0.0});
        const auto d = exact_distribution(p, 2);
        const auto ref = oracle::subset_sum_counts(p.values(), 2);
        CHECK(d.size() <= ref.size()); // grouping can only merge
        BigInt total = 0;
        for (const BigInt& c : d.counts) total += c;
        CHECK(total == 6);
    }
}

TEST_CASE("tail probabilities with strict and non-strict thresholds") {
    const auto d = exact_distribution(kOneThirds, 2);
    CHECK(tail_probability(d, Rational(0), true) == Rational(1, 2));
    CHECK(tail_probability(d, Rational(0), false) == Rational(1, 2));
    CHECK(tail_probability(d, Rational(-1), false) == 1);
    CHECK(tail_probability(d, Rational(2, 3), false) == Rational(1, 2));
    CHECK(tail_probability(d, Rational(2, 3), true) == 0);

    const auto e = exact_distribution(kFourPoint, 2);
    CHECK(tail_probability(e, 0.0, false) == Catch::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(tail_probability(e, 0.0, true) == Catch::Approx(1.0 / 3).epsilon(1e-14));

    SECTION("float mode resolves the boundary atom by tolerance") {
        // Threshold a hair below the atom still counts it (non-strict).
        CHECK(tail_probability(e, 1.0 - 1e-12, false) == Catch::Approx(1.0 / 3));
        // And a hair above excludes it once past the tolerance.
        CHECK(tail_probability(e, 1.0 + 1e-6, false) == 0.0);
    }
}

TEST_CASE("expectation helpers") {
    const auto d = exact_distribution(kOneThirds, 2);
    CHECK(expected_value(d) == 0);
    CHECK(expected_abs(d) == Rational(2, 3));
    const auto e = exact_distribution(kFourPoint, 2);
    CHECK(expected_abs(e) == Catch::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(expected_value(e) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("positive-part identities") {
    SECTION("(1,-1) choose 1") {
        const auto r =
            positive_part_identities(exact_distribution(Population<Rational>({Rational(1), Rational(-1)}), 1));
        CHECK(r.e_plus == Rational(1, 2));
        CHECK(r.e_minus == Rational(1, 2));
        CHECK(r.cond_mean_pos == Rational(1));
        CHECK(r.folklore_residual == 0);
    }
    SECTION("(1, -1/3, -1/3, -1/3) choose 2") {
        const auto r = positive_part_identities(exact_distribution(kOneThirds, 2));
        CHECK(r.cond_mean_pos == Rational(2, 3));
        CHECK(r.e_abs == Rational(2, 3));
        CHECK(r.folklore_residual == 0); // P(X>0) = 1/2 = (2/3)/(2 * 2/3)
    }
    SECTION("(1, 0, 0, -1) choose 2") {
        const auto r = positive_part_identities(exact_distribution(kFourPoint, 2));
        CHECK(r.folklore_residual == Catch::Approx(0.0).margin(1e-14));
        CHECK(r.cond_mean_pos == Catch::Approx(1.0).epsilon(1e-14));
    }
    SECTION("no mass above zero") {
        // Zero population: every subset sums to 0.
        const auto d = exact_distribution(Population<double>({0.0, 0.0, 0.0}), 1);
        CHECK_THROWS_AS(positive_part_identities(d), NoPositiveMassError);
    }
}

TEST_CASE("two-block closed form vs enumeration") {
    SECTION("worked example (n=5, i=2, k=2)") {
        const auto d = two_block_distribution<Rational>(5, 2, 2, Rational(1));
        REQUIRE(d.size() == 3);
        CHECK(d.support == std::vector<Rational>{Rational(-2, 3), Rational(1, 6), Rational(1)});
        CHECK(d.counts == std::vector<BigInt>{3, 6, 1});
        CHECK(d.denominator == 10);
    }
    SECTION("(n=4, i=1, k=2) collapses to two atoms") {
        const auto d = two_block_distribution<Rational>(4, 1, 2, Rational(1));
        REQUIRE(d.size() == 2);
        CHECK(d.support == std::vector<Rational>{Rational(-2, 3), Rational(2, 3)});
        CHECK(d.probability(0) == Rational(1, 2));
    }
    SECTION("(n=2, i=1, k=1)") {
        const auto d = two_block_distribution<Rational>(2, 1, 1, Rational(1));
        CHECK(d.support == std::vector<Rational>{Rational(-1), Rational(1)});
    }
    SECTION("systematic agreement with enumeration, n <= 10") {
        for (long n = 2; n <= 10; ++n)
            for (long i = 1; i <= n - 1; ++i) {
                std::vector<Rational> vals(static_cast<std::size_t>(n));
                std::fill(vals.begin(), vals.begin() + i, Rational(1, i));
                std::fill(vals.begin() + i, vals.end(), Rational(-1, n - i));
                const Population<Rational> p(std::move(vals));
                for (long k = 1; k <= n - 1; ++k) {
                    CAPTURE(n, i, k);
                    const auto lhs = two_block_distribution<Rational>(n, i, k, Rational(1));
                    const auto rhs = exact_distribution(p, k);
                    REQUIRE(lhs.support == rhs.support);
                    REQUIRE(lhs.counts == rhs.counts);
                    REQUIRE(lhs.denominator == rhs.denominator);
                }
            }
    }
}

TEST_CASE("extreme three-point law") {
    SECTION("(n=4, k=2)") {
        const auto d = extreme_distribution<Rational>(4, 2, Rational(1));
        CHECK(d.support == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
        CHECK(d.counts == std::vector<BigInt>{2, 2, 2});
    }
    SECTION("(n=2, k=1) has no zero atom") {
        const auto d = extreme_distribution<Rational>(2, 1, Rational(1));
        REQUIRE(d.size() == 2);
        CHECK(d.support == std::vector<Rational>{Rational(-1), Rational(1)});
    }
    SECTION("(n=100, k=50) closed form") {
        const auto d = extreme_distribution<Rational>(100, 50, Rational(1));
        REQUIRE(d.size() == 3);
        CHECK(d.probability(0) == Rational(25, 99)); // = k(n-k)/(n(n-1))
        CHECK(d.probability(2) == Rational(25, 99));
        CHECK(d.probability(1) == Rational(49, 99));
        CHECK(d.counts[0] == BigInt("25477612258980856902730428600")); // C(98,49)
    }
    SECTION("agrees with enumeration for n <= 10") {
        for (long n = 2; n <= 10; ++n)
            for (long k = 1; k <= n - 1; ++k) {
                CAPTURE(n, k);
                const auto lhs = extreme_distribution<Rational>(n, k, Rational(1));
                const auto rhs = exact_distribution(extreme_population<Rational>(n, Rational(1)), k);
                REQUIRE(lhs.support == rhs.support);
                REQUIRE(lhs.counts == rhs.counts);
            }
    }
}

TEST_CASE("Monte Carlo tail estimates") {
    const Population<double> p({1.0, -1.0 / 3, -1.0 / 3, -1.0 / 3});

    SECTION("within four standard errors of the enumerated value") {
        const MCEstimate est = mc_tail(p, 2, 0.0, true, 100000, 42);
        CHECK(est.reps == 100000);
        CHECK(est.std_error == Catch::Approx(std::sqrt(est.estimate * (1 - est.estimate) / 1e5)));
        CHECK(std::fabs(est.estimate - 0.5) <= 4 * est.std_error);
    }
    SECTION("deterministic for a fixed seed") {
        const MCEstimate a = mc_tail(p, 2, 0.0, true, 20000, 7);
        const MCEstimate b = mc_tail(p, 2, 0.0, true, 20000, 7);
        CHECK(a.estimate == b.estimate);
        CHECK(a.seed == 7);
        const MCEstimate c = mc_tail(p, 2, 0.0, true, 20000, 8);
        CHECK(a.estimate != c.estimate); // different stream, overwhelmingly
    }
    SECTION("single rep is a Bernoulli draw") {
        const MCEstimate e = mc_tail(p, 2, 0.0, true, 1, 3);
        CHECK((e.estimate == 0.0 || e.estimate == 1.0));
    }
    SECTION("validation") {
        CHECK_THROWS_AS(mc_tail(p, 0, 0.0, true, 10, 1), DomainError);
        CHECK_THROWS_AS(mc_tail(p, 4, 0.0, true, 10, 1), DomainError);
        CHECK_THROWS_AS(mc_tail(p, 2, 0.0, true, 0, 1), DomainError);
    }
}

TEST_CASE("splitmix generator basics") {
    SplitMix64 rng(12345);
    SplitMix64 rng2(12345);
    for (int j = 0; j < 100; ++j) CHECK(rng.next() == rng2.next());
    for (int j = 0; j < 1000; ++j) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(rng.uniform_below(7) < 7);
    }
}
