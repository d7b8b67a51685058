// Command-line front end: evaluate tail bounds on a population, sweep the
// bound comparison across k, dump exact subset-sum distributions, run Monte
// Carlo estimates, and execute the property-verification suites.
//
// Exit codes: 0 success, 1 property failure (verify), 2 usage or input error,
// 3 enumeration budget exceeded.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "swor/swor.hpp"

namespace {

using namespace swor;

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
}

std::string general(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::string(buf);
}

/// Which tail a bound id speaks about, for self-describing eval output.
const char* tail_label(BoundId id) {
    switch (id) {
        case BoundId::pokrovskiy:
        case BoundId::upper_at_zero: return "P(X >= 0)";
        case BoundId::lower_at_zero: return "P(X > 0)";
        default: return "P(X >= t)";
    }
}

void print_bound_table(std::ostream& os, const std::vector<std::pair<BoundId, BoundResult>>& rows) {
    os << "bound          kind   tail        value      raw          note\n";
    for (const auto& [id, r] : rows) {
        char line[256];
        if (r.applicable)
            std::snprintf(line, sizeof(line), "%-14s %-6s %-11s %-10s %-12s", to_string(id),
                          to_string(r.kind), tail_label(id), fixed6(r.value).c_str(),
                          general(r.raw).c_str());
        else
            std::snprintf(line, sizeof(line), "%-14s %-6s %-11s %-10s %-12s %s", to_string(id),
                          to_string(r.kind), tail_label(id), "-", "-", r.reason.c_str());
        std::string text(line);
        while (!text.empty() && text.back() == ' ') text.pop_back();
        os << text << "\n";
    }
}

template <class S>
int run_eval(const Population<S>& p, long k, const std::string& t_text, double delta,
             long long reps, std::uint64_t seed) {
    const S t = parse_scalar<S>(t_text);
    const PopulationStats<double> st = stats_as_double(stats(p));
    if (k < 1 || k > p.n() - 1)
        throw DomainError("k must be in [1, n-1], got k=" + std::to_string(k) +
                          " for n=" + std::to_string(p.n()));

    std::cout << "population: n=" << p.n() << "  alpha=" << general(st.alpha)
              << "  min=" << general(st.a) << "  max=" << general(st.b)
              << "  sigma2=" << general(st.sigma2)
              << "  arithmetic=" << (scalar_traits<S>::is_exact ? "exact" : "float") << "\n";
    std::cout << "query: k=" << k << "  t=" << format_scalar(t)
              << "  eps=t/k=" << general(to_double(t) / static_cast<double>(k))
              << "  delta=" << general(delta) << "\n\n";

    print_bound_table(std::cout, evaluate_all(p.n(), k, st, to_double(t), delta));
    std::cout << "\n";

    try {
        const auto d = exact_distribution(p, k);
        const S tail_ge = tail_probability(d, t, false);
        const S tail_gt = tail_probability(d, t, true);
        std::cout << "exact (" << d.denominator.str() << " subsets):"
                  << "  P(X >= t) = " << format_scalar(tail_ge);
        if constexpr (scalar_traits<S>::is_exact)
            std::cout << " ~ " << general(to_double(tail_ge));
        std::cout << "  P(X > t) = " << format_scalar(tail_gt);
        if constexpr (scalar_traits<S>::is_exact)
            std::cout << " ~ " << general(to_double(tail_gt));
        std::cout << "\n";
    } catch (const BudgetExceededError&) {
        const MCEstimate ge = mc_tail(p, k, t, false, reps, seed);
        const MCEstimate gt = mc_tail(p, k, t, true, reps, seed);
        std::cout << "monte carlo (enumeration over budget, reps=" << reps << ", seed=" << seed
                  << "):  P(X >= t) ~ " << fixed6(ge.estimate) << " +- " << fixed6(ge.std_error)
                  << "  P(X > t) ~ " << fixed6(gt.estimate) << " +- " << fixed6(gt.std_error)
                  << "\n";
    }
    return 0;
}

int run_compare(long n, double alpha, std::vector<double> eps_list, double delta,
                const std::string& out_path, const std::string& svg_prefix) {
    if (eps_list.empty()) eps_list = {0.001, 0.005, 0.01};
    const std::vector<CompareRow> rows = comparison_rows(n, alpha, eps_list, delta);

    if (out_path.empty()) {
        write_comparison_csv(std::cout, rows, n, alpha, delta);
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open output file: " + out_path);
        write_comparison_csv(out, rows, n, alpha, delta);
    }

    if (!svg_prefix.empty()) {
        for (const double eps : eps_list) {
            std::vector<CompareRow> slice;
            for (const CompareRow& r : rows)
                if (r.eps == eps) slice.push_back(r);
            std::ostringstream name;
            name << svg_prefix << "_eps" << general(eps) << ".svg";
            std::ofstream out(name.str());
            if (!out) throw ParseError("cannot open output file: " + name.str());
            write_comparison_svg(out, slice, n, eps, delta);
            std::cerr << "wrote " << name.str() << "\n";
        }
    }
    return 0;
}

template <class S>
int run_dist(const Population<S>& p, long k, const std::string& out_path) {
    DiscreteDistribution<S> d = [&] {
        try {
            return exact_distribution(p, k);
        } catch (const BudgetExceededError& e) {
            throw BudgetExceededError(std::string(e.what()) +
                                      " (use the `sample` command for Monte Carlo instead)");
        }
    }();
    if (out_path.empty()) {
        write_distribution_csv(std::cout, d);
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open output file: " + out_path);
        write_distribution_csv(out, d);
    }
    return 0;
}

template <class S>
int run_sample(const Population<S>& p, long k, const std::string& t_text, bool strict,
               long long reps, std::uint64_t seed) {
    const S t = parse_scalar<S>(t_text);
    const MCEstimate est = mc_tail(p, k, t, strict, reps, seed);
    std::cout << "P(X " << (strict ? ">" : ">=") << " " << format_scalar(t) << ")"
              << "  estimate=" << fixed6(est.estimate) << "  std_error=" << fixed6(est.std_error)
              << "  reps=" << est.reps << "  seed=" << est.seed << "\n";
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
    VerifyOptions opts;
    opts.seed = seed;
    const std::vector<VerifyReport> reports = run_suites(suite, opts);
    long long total_failures = 0;
    for (const VerifyReport& r : reports) {
        char line[160];
        std::snprintf(line, sizeof(line), "suite %-13s %9lld cases  %4lld failures  (%.2f s)",
                      r.suite.c_str(), r.cases, r.failure_count, r.wall_seconds);
        std::cout << line << "\n";
        for (const VerifyFailure& f : r.failures) std::cout << "  FAIL " << f.description << "\n";
        if (r.failure_count > static_cast<long long>(r.failures.size()))
            std::cout << "  ... " << (r.failure_count - static_cast<long long>(r.failures.size()))
                      << " more failures suppressed\n";
        total_failures += r.failure_count;
    }
    std::cout << (total_failures == 0 ? "verify: all properties hold\n"
                                      : "verify: property violations found\n");
    return total_failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tail bounds for sums of k values sampled without replacement from a "
                 "zero-sum population"};
    app.require_subcommand(1);

    // eval ------------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate every bound for one population");
    std::string eval_pop, eval_t = "0";
    long eval_k = 1;
    double eval_delta = 0.05;
    bool eval_rational = false;
    long long eval_reps = 100000;
    std::uint64_t eval_seed = 1;
    eval->add_option("pop_file", eval_pop, "population file (one value per line, or JSON array)")
        ->required();
    eval->add_option("--k", eval_k, "sample size")->required();
    eval->add_option("--t", eval_t, "sum threshold; accepts decimals or p/q")
        ->capture_default_str();
    eval->add_option("--delta", eval_delta, "confidence parameter of the Bernstein-form bound")
        ->capture_default_str();
    eval->add_flag("--rational", eval_rational, "force exact rational arithmetic");
    eval->add_option("--reps", eval_reps, "Monte Carlo repetitions if enumeration is over budget")
        ->capture_default_str();
    eval->add_option("--seed", eval_seed, "Monte Carlo seed")->capture_default_str();

    // compare ---------------------------------------------------------------
    auto* compare = app.add_subcommand(
        "compare", "sweep the sample-average bounds against the absolute-deviation bound");
    long cmp_n = 100;
    double cmp_alpha = 1.0, cmp_delta = 0.05;
    std::vector<double> cmp_eps;
    std::string cmp_out, cmp_svg;
    compare->add_option("--n", cmp_n, "population size")->capture_default_str();
    compare->add_option("--alpha", cmp_alpha, "half of the total absolute value")
        ->capture_default_str();
    compare->add_option("--eps", cmp_eps,
                        "sample-average thresholds (default 0.001 0.005 0.01)");
    compare->add_option("--delta", cmp_delta, "confidence parameter of the Bernstein-form bound")
        ->capture_default_str();
    compare->add_option("--out", cmp_out, "CSV output path (default: stdout)");
    compare->add_option("--svg", cmp_svg, "SVG path prefix; writes <prefix>_eps<e>.svg per eps");

    // dist ------------------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "dump the exact subset-sum distribution as CSV");
    std::string dist_pop, dist_out;
    long dist_k = 1;
    bool dist_rational = false;
    dist->add_option("pop_file", dist_pop, "population file")->required();
    dist->add_option("--k", dist_k, "sample size")->required();
    dist->add_flag("--rational", dist_rational, "force exact rational arithmetic");
    dist->add_option("--out", dist_out, "CSV output path (default: stdout)");

    // sample ----------------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "Monte Carlo tail estimate");
    std::string sample_pop, sample_t = "0";
    long sample_k = 1;
    bool sample_strict = false, sample_rational = false;
    long long sample_reps = 100000;
    std::uint64_t sample_seed = 1;
    sample->add_option("pop_file", sample_pop, "population file")->required();
    sample->add_option("--k", sample_k, "sample size")->required();
    sample->add_option("--t", sample_t, "sum threshold; accepts decimals or p/q")
        ->capture_default_str();
    sample->add_flag("--strict", sample_strict, "estimate P(X > t) instead of P(X >= t)");
    sample->add_option("--reps", sample_reps, "number of repetitions")->capture_default_str();
    sample->add_option("--seed", sample_seed, "RNG seed")->capture_default_str();
    sample->add_flag("--rational", sample_rational, "force exact rational arithmetic");

    // verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the property-verification suites");
    std::string verify_suite = "all";
    std::uint64_t verify_seed = 1;
    verify
        ->add_option("--suite", verify_suite,
                     "one of: hypergeom, majorization, schur, bounds, folklore, all")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "RNG seed for the randomized properties")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints the message or the help text
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            if (eval_reps < 1) throw DomainError("--reps must be at least 1");
            return std::visit(
                [&](const auto& p) {
                    return run_eval(p, eval_k, eval_t, eval_delta, eval_reps, eval_seed);
                },
                load_population(eval_pop, eval_rational));
        }
        if (compare->parsed())
            return run_compare(cmp_n, cmp_alpha, cmp_eps, cmp_delta, cmp_out, cmp_svg);
        if (dist->parsed())
            return std::visit([&](const auto& p) { return run_dist(p, dist_k, dist_out); },
                              load_population(dist_pop, dist_rational));
        if (sample->parsed()) {
            if (sample_reps < 1) throw DomainError("--reps must be at least 1");
            return std::visit(
                [&](const auto& p) {
                    return run_sample(p, sample_k, sample_t, sample_strict, sample_reps,
                                      sample_seed);
                },
                load_population(sample_pop, sample_rational));
        }
        if (verify->parsed()) return run_verify(verify_suite, verify_seed);
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
