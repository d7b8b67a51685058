#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "swor/exact_dist.hpp"
#include "swor/io.hpp"

using namespace swor;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& contents)
        : path(std::filesystem::temp_directory_path() / name) {
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

} // namespace

TEST_CASE("line-oriented population files") {
    const TempFile f("swor_pop_lines.txt", "# a comment\n1.0\n\n-0.25\n-0.75\n");
    const LoadedPopulation lp = load_population(f.path.string());
    REQUIRE(std::holds_alternative<Population<double>>(lp));
    const auto& p = std::get<Population<double>>(lp);
    CHECK(p.values() == std::vector<double>{1.0, -0.25, -0.75});
}

TEST_CASE("JSON array population files") {
    const TempFile f("swor_pop.json", "  [1.0, -0.25, -0.75]");
    const LoadedPopulation lp = load_population(f.path.string());
    REQUIRE(std::holds_alternative<Population<double>>(lp));
    CHECK(std::get<Population<double>>(lp).values() == std::vector<double>{1.0, -0.25, -0.75});

    SECTION("decimal tokens survive exactly into rational mode") {
        const TempFile g("swor_pop_exact.json", "[0.1, 0.2, \"-3/10\", 0]");
        const LoadedPopulation lq = load_population(g.path.string());
        REQUIRE(std::holds_alternative<Population<Rational>>(lq)); // "p/q" switches modes
        const auto& q = std::get<Population<Rational>>(lq);
        CHECK(q.values() == std::vector<Rational>{Rational(1, 10), Rational(1, 5),
                                                  Rational(-3, 10), Rational(0)});
    }
    SECTION("nested or non-numeric arrays are rejected") {
        const TempFile g("swor_pop_bad1.json", "[[1], [-1]]");
        CHECK_THROWS_AS(load_population(g.path.string()), ParseError);
        const TempFile h("swor_pop_bad2.json", "[true, false]");
        CHECK_THROWS_AS(load_population(h.path.string()), ParseError);
        const TempFile i("swor_pop_bad3.json", "{\"values\": [1, -1]}");
        CHECK_THROWS_AS(load_population(i.path.string()), ParseError);
        const TempFile j("swor_pop_bad4.json", "[1, -1");
        CHECK_THROWS_AS(load_population(j.path.string()), ParseError);
    }
}

TEST_CASE("fraction tokens or the rational flag select exact arithmetic") {
    const TempFile f("swor_pop_frac.txt", "1\n-1/3\n-1/3\n-1/3\n");
    const LoadedPopulation lp = load_population(f.path.string());
    REQUIRE(std::holds_alternative<Population<Rational>>(lp));
    CHECK(std::get<Population<Rational>>(lp).alpha() == Rational(1));

    SECTION("forcing rational mode on plain decimals") {
        const TempFile g("swor_pop_dec.txt", "0.5\n-0.5\n");
        const LoadedPopulation lq = load_population(g.path.string(), /*force_rational=*/true);
        REQUIRE(std::holds_alternative<Population<Rational>>(lq));
        CHECK(std::get<Population<Rational>>(lq).values()[0] == Rational(1, 2));
    }
}

TEST_CASE("unreadable or empty files raise ParseError") {
    CHECK_THROWS_AS(load_population("/nonexistent/swor/pop.txt"), ParseError);
    const TempFile f("swor_pop_empty.txt", "# nothing here\n\n");
    CHECK_THROWS_AS(load_population(f.path.string()), ParseError);
}

TEST_CASE("invalid numbers in population files raise ParseError") {
    const TempFile f("swor_pop_junk.txt", "1.0\nnot-a-number\n-1.0\n");
    CHECK_THROWS_AS(load_population(f.path.string()), ParseError);
}

TEST_CASE("zero-sum violations surface from loading") {
    const TempFile f("swor_pop_nonzero.txt", "1.0\n-0.5\n");
    CHECK_THROWS_AS(load_population(f.path.string()), ZeroSumViolation);
}

TEST_CASE("distribution CSV dump") {
    SECTION("exact mode writes fractions") {
        const auto d =
            exact_distribution(Population<Rational>({Rational(1), Rational(-1)}), 1);
        std::ostringstream out;
        write_distribution_csv(out, d);
        CHECK(out.str() == "# denominator=C(2,1)=2\n"
                           "value,count,probability\n"
                           "-1,1,1/2\n"
                           "1,1,1/2\n");
    }
    SECTION("float mode writes doubles") {
        const auto d = exact_distribution(Population<double>({1.0, 0.0, 0.0, -1.0}), 2);
        std::ostringstream out;
        write_distribution_csv(out, d);
        std::istringstream in(out.str());
        std::string line;
        std::getline(in, line);
        CHECK(line == "# denominator=C(4,2)=6");
        std::getline(in, line);
        CHECK(line == "value,count,probability");
        int rows = 0;
        while (std::getline(in, line)) ++rows;
        CHECK(rows == 3);
    }
}
