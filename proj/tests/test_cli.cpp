// End-to-end tests of the `swor` binary: exit codes, output contracts, and
// determinism. The binary path is injected by the build as SWOR_CLI_PATH.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int unique_id() {
    static int counter = 0;
    return ++counter;
}

/// Runs the CLI with the given argument string, capturing stdout/stderr.
CliResult run_cli(const std::string& args) {
    const int id = unique_id();
    const fs::path out_path = fs::temp_directory_path() / ("swor_cli_out_" + std::to_string(id));
    const fs::path err_path = fs::temp_directory_path() / ("swor_cli_err_" + std::to_string(id));
    const std::string cmd = std::string(SWOR_CLI_PATH) + " " + args + " >" + out_path.string() +
                            " 2>" + err_path.string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    fs::remove(out_path);
    fs::remove(err_path);
    if (status != -1 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

/// Writes a population file into the temp directory; removed on destruction.
struct TempPop {
    fs::path path;
    explicit TempPop(const std::string& content) {
        path = fs::temp_directory_path() / ("swor_cli_pop_" + std::to_string(unique_id()) + ".txt");
        std::ofstream(path) << content;
    }
    ~TempPop() {
        std::error_code ec;
        fs::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

const std::string kFourPointFile = "1\n0\n0\n-1\n";

std::string big_zero_sum_file() {
    std::string text;
    for (int j = 0; j < 20; ++j) text += "1\n";
    for (int j = 0; j < 20; ++j) text += "-1\n";
    return text;
}

} // namespace

TEST_CASE("help exits zero and lists the subcommands") {
    const CliResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    for (const char* name : {"eval", "compare", "dist", "sample", "verify"})
        CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("eval reports the bound table and the exact tail") {
    TempPop pop(kFourPointFile);

    SECTION("float mode") {
        const CliResult r = run_cli("eval " + pop.str() + " --k 2 --t 0.5");
        INFO(r.out << r.err);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("n=4") != std::string::npos);
        CHECK(r.out.find("arithmetic=float") != std::string::npos);
        CHECK(r.out.find("abs_dev_upper") != std::string::npos);
        CHECK(r.out.find("0.666667") != std::string::npos);     // abs_dev_upper value
        CHECK(r.out.find("exact (6 subsets)") != std::string::npos);
        CHECK(r.out.find("0.333333") != std::string::npos);     // P(X >= 1/2) = 1/3
        // zero-threshold bounds stay applicable at t > 0, labelled with their tail
        CHECK(r.out.find("P(X > 0)") != std::string::npos);
    }

    SECTION("rational mode prints exact tails") {
        const CliResult r = run_cli("eval " + pop.str() + " --k 2 --t 1/2 --rational");
        INFO(r.out << r.err);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("arithmetic=exact") != std::string::npos);
        CHECK(r.out.find("t=1/2") != std::string::npos);
        CHECK(r.out.find("= 1/3") != std::string::npos);
    }
}

TEST_CASE("eval error handling") {
    SECTION("missing population file exits 2") {
        const CliResult r = run_cli("eval /nonexistent/pop.txt --k 2");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("cannot open") != std::string::npos);
    }
    SECTION("missing required --k is a usage error") {
        TempPop pop(kFourPointFile);
        const CliResult r = run_cli("eval " + pop.str());
        CHECK(r.exit_code == 2);
    }
    SECTION("k out of range exits 2") {
        TempPop pop(kFourPointFile);
        const CliResult r = run_cli("eval " + pop.str() + " --k 4");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("k must be in [1, n-1]") != std::string::npos);
    }
}

TEST_CASE("eval falls back to Monte Carlo when enumeration is over budget") {
    TempPop pop(big_zero_sum_file());
    const CliResult r = run_cli("eval " + pop.str() + " --k 20 --t 0 --seed 3");
    INFO(r.out << r.err);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("monte carlo") != std::string::npos);
    CHECK(r.out.find("seed=3") != std::string::npos);
    CHECK(r.out.find("reps=100000") != std::string::npos);
}

TEST_CASE("compare emits the documented CSV on stdout") {
    const CliResult r = run_cli("compare");
    INFO(r.err);
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 2 + 3 * 99); // comment + header + (k=1..99) x 3 eps
    CHECK(lines[0].rfind("# n=100 alpha=1 delta=0.05", 0) == 0);
    CHECK(lines[1] == "k,eps,bm_serfling,bm_serfling_raw,bm_bernstein,bm_bernstein_raw,"
                      "abs_dev_upper");

    // spot-check the k=50, eps=0.005 row against the closed forms
    std::string row;
    for (const std::string& line : lines)
        if (line.rfind("50,0.005,", 0) == 0) row = line;
    REQUIRE(!row.empty());
    const std::vector<std::string> f = split_csv(row);
    REQUIRE(f.size() == 7);
    const double serfling =
        std::exp(-2.0 * 50 * 0.005 * 0.005 / ((1.0 - 0.5) * (1.0 + 1.0 / 50) * 4.0));
    const double abs_dev = 1.0 - (0.25 / 0.75) * (1.0 - 2.0 * 50 * 50 / (100.0 * 99.0));
    CHECK(std::stod(f[2]) == Catch::Approx(serfling).epsilon(1e-9));
    CHECK(std::stod(f[6]) == Catch::Approx(abs_dev).epsilon(1e-9));
}

TEST_CASE("compare writes CSV and SVG files") {
    const int id = unique_id();
    const fs::path csv = fs::temp_directory_path() / ("swor_cmp_" + std::to_string(id) + ".csv");
    const fs::path svg_prefix = fs::temp_directory_path() / ("swor_cmp_" + std::to_string(id));
    const CliResult r = run_cli("compare --n 20 --eps 0.01 --out " + csv.string() + " --svg " +
                                svg_prefix.string());
    INFO(r.err);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());

    const std::vector<std::string> lines = split_lines(slurp(csv));
    REQUIRE(lines.size() == 2 + 19);
    CHECK(lines[1].rfind("k,eps,", 0) == 0);

    const fs::path svg(svg_prefix.string() + "_eps0.01.svg");
    REQUIRE(fs::exists(svg));
    const std::string body = slurp(svg);
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("abs_dev_upper") != std::string::npos);

    fs::remove(csv);
    fs::remove(svg);
}

TEST_CASE("dist prints the exact distribution as CSV") {
    TempPop pop("1\n-1\n");
    const CliResult r = run_cli("dist " + pop.str() + " --k 1 --rational");
    INFO(r.err);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "# denominator=C(2,1)=2\n"
                   "value,count,probability\n"
                   "-1,1,1/2\n"
                   "1,1,1/2\n");
}

TEST_CASE("dist over the enumeration budget exits 3 and points at sample") {
    TempPop pop(big_zero_sum_file());
    const CliResult r = run_cli("dist " + pop.str() + " --k 20");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("sample") != std::string::npos);
}

TEST_CASE("sample is deterministic for a fixed seed") {
    TempPop pop(big_zero_sum_file());
    const std::string args = "sample " + pop.str() + " --k 20 --t 0 --seed 7";
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    INFO(first.out << first.err);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("P(X >= 0)") != std::string::npos);
    CHECK(first.out.find("reps=100000") != std::string::npos);
    CHECK(first.out.find("seed=7") != std::string::npos);

    const CliResult strict = run_cli(args + " --strict");
    CHECK(strict.out.find("P(X > 0)") != std::string::npos);
}

TEST_CASE("sample rejects a nonpositive repetition count") {
    TempPop pop("1\n-1\n");
    const CliResult r = run_cli("sample " + pop.str() + " --k 1 --reps 0");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("reps") != std::string::npos);
}

TEST_CASE("verify runs a suite end to end") {
    const CliResult r = run_cli("verify --suite folklore --seed 1");
    INFO(r.out << r.err);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("suite folklore") != std::string::npos);
    CHECK(r.out.find("all properties hold") != std::string::npos);
}

TEST_CASE("verify rejects an unknown suite") {
    const CliResult r = run_cli("verify --suite bogus");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("unknown") != std::string::npos);
}
