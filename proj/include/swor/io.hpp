#pragma once

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "swor/errors.hpp"
#include "swor/exact_dist.hpp"
#include "swor/numeric.hpp"
#include "swor/population.hpp"

namespace swor {

using LoadedPopulation = std::variant<Population<double>, Population<Rational>>;

namespace detail {

/// SAX handler that keeps the raw numeric literals of a flat JSON array, so
/// exact mode can turn "0.1" into 1/10 instead of the nearest double.
class PopulationArraySax {
  public:
    std::vector<std::string> tokens;
    std::string error;

    bool null() { return fail("null entry"); }
    bool boolean(bool) { return fail("boolean entry"); }
    bool number_integer(nlohmann::json::number_integer_t v) {
        return keep(std::to_string(v));
    }
    bool number_unsigned(nlohmann::json::number_unsigned_t v) {
        return keep(std::to_string(v));
    }
    bool number_float(nlohmann::json::number_float_t, const std::string& raw) {
        return keep(raw);
    }
    bool string(std::string& v) { return keep(v); }
    bool binary(nlohmann::json::binary_t&) { return fail("binary entry"); }
    bool start_object(std::size_t) { return fail("nested object"); }
    bool key(std::string&) { return fail("nested object"); }
    bool end_object() { return fail("nested object"); }
    bool start_array(std::size_t) {
        if (depth_++ == 0) return true;
        return fail("nested array");
    }
    bool end_array() { return true; }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::json::exception& ex) {
        error = "JSON parse error at byte " + std::to_string(pos) + ": " + ex.what();
        return false;
    }

  private:
    int depth_ = 0;

    bool keep(std::string token) {
        if (depth_ != 1) return fail("value outside the top-level array");
        tokens.push_back(std::move(token));
        return true;
    }
    bool fail(const std::string& what) {
        error = "population JSON must be a flat array of numbers or \"p/q\" strings (" +
                what + ")";
        return false;
    }
};

inline std::vector<std::string> population_tokens_from_json(const std::string& text) {
    PopulationArraySax sax;
    if (!nlohmann::json::sax_parse(text, &sax)) {
        if (sax.error.empty()) sax.error = "malformed population JSON";
        throw ParseError(sax.error);
    }
    return sax.tokens;
}

inline std::vector<std::string> population_tokens_from_lines(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        std::string token = line.substr(first, last - first + 1);
        if (token[0] == '#') continue;
        tokens.push_back(std::move(token));
    }
    return tokens;
}

} // namespace detail

/// Reads the raw value tokens of a population file. A leading '[' selects the
/// JSON array form; anything else is the one-value-per-line text form (blank
/// lines and '#' comments skipped).
inline std::vector<std::string> read_population_tokens(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open population file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw ParseError("population file is empty: " + path);
    if (text[first] == '[') return detail::population_tokens_from_json(text);
    return detail::population_tokens_from_lines(text);
}

/// Loads and validates a population. Any "p/q" token — or force_rational —
/// switches the whole population to exact rational mode.
inline LoadedPopulation load_population(const std::string& path, bool force_rational = false) {
    const std::vector<std::string> tokens = read_population_tokens(path);
    if (tokens.empty()) throw ParseError("no population values in file: " + path);
    bool exact = force_rational;
    for (const std::string& t : tokens)
        if (t.find('/') != std::string::npos) exact = true;
    if (exact) {
        std::vector<Rational> values;
        values.reserve(tokens.size());
        for (const std::string& t : tokens) values.push_back(parse_rational(t));
        return Population<Rational>(std::move(values));
    }
    std::vector<double> values;
    values.reserve(tokens.size());
    for (const std::string& t : tokens) values.push_back(parse_scalar<double>(t));
    return Population<double>(std::move(values));
}

/// Distribution dump: `# denominator=C(n,k)=...` comment, then
/// `value,count,probability` rows. Exact mode writes values and probabilities
/// as "p/q"; float mode writes round-trippable decimals.
template <class S>
void write_distribution_csv(std::ostream& os, const DiscreteDistribution<S>& d) {
    os << "# denominator=C(" << d.n << "," << d.k << ")=" << d.denominator.str() << "\n";
    os << "value,count,probability\n";
    for (std::size_t j = 0; j < d.size(); ++j) {
        os << format_scalar(d.support[j]) << "," << d.counts[j].str() << ","
           << format_scalar(d.probability(j)) << "\n";
    }
}

} // namespace swor
