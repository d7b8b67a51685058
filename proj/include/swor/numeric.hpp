#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "swor/errors.hpp"

namespace swor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(const BigInt& v) { return v.template convert_to<double>(); }

/// Binomial coefficient C(n, k) as an exact big integer; 0 outside 0 <= k <= n.
/// Backed by a thread-local Pascal triangle grown on demand, so repeated
/// queries in sweeps are table lookups. Each thread owns its table; no
/// synchronization is involved and results never depend on the cache.
inline const BigInt& binomial(long n, long k) {
    static thread_local BigInt zero = 0;
    static thread_local std::vector<std::vector<BigInt>> rows;
    if (n < 0 || k < 0 || k > n) return zero;
    if (static_cast<long>(rows.size()) <= n) {
        if (rows.empty()) rows.push_back({BigInt(1)});
        for (long m = static_cast<long>(rows.size()); m <= n; ++m) {
            std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
            row[0] = 1;
            row[static_cast<std::size_t>(m)] = 1;
            const auto& prev = rows.back();
            for (long j = 1; j < m; ++j)
                row[static_cast<std::size_t>(j)] =
                    prev[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(j)];
            rows.push_back(std::move(row));
        }
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// log C(n, k) for the floating-point evaluation path.
inline double log_binomial(long n, long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

/// Traits bridging the two numeric modes: exact rationals and binary doubles.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double from_int(long long v) { return static_cast<double>(v); }
    static double from_ratio(const BigInt& p, const BigInt& q) {
        return to_double(Rational(p, q));
    }
    static double from_ratio(long long p, long long q) {
        return static_cast<double>(p) / static_cast<double>(q);
    }
    static double abs(double v) { return std::fabs(v); }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational from_int(long long v) { return Rational(v); }
    static Rational from_ratio(const BigInt& p, const BigInt& q) { return Rational(p, q); }
    static Rational from_ratio(long long p, long long q) { return Rational(p, q); }
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
};

namespace detail {

inline bool parse_integer(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        pos = 1;
    }
    if (pos == s.size()) return false;
    BigInt v = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9') return false;
        v = v * 10 + (s[pos] - '0');
    }
    out = neg ? BigInt(-v) : v;
    return true;
}

} // namespace detail

/// Parses "p/q", integer, or decimal ("1.25", "-3e-2") into an exact rational.
/// Surrounding whitespace is ignored.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&]() -> ParseError {
        return ParseError("cannot parse rational value: '" + std::string(text) + "'");
    };
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt p, q;
        if (!detail::parse_integer(text.substr(0, slash), p) ||
            !detail::parse_integer(text.substr(slash + 1), q))
            throw bad();
        if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    }
    // Decimal: [sign] digits [. digits] [e [sign] digits]
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = (s[0] == '-');
        s.remove_prefix(1);
    }
    long long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        BigInt ev;
        if (!detail::parse_integer(s.substr(e + 1), ev) || ev < -100000 || ev > 100000)
            throw bad();
        exp10 = ev.convert_to<long long>();
        s = s.substr(0, e);
    }
    BigInt mant = 0;
    long long frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) throw bad();
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            mant = mant * 10 + (c - '0');
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else {
            throw bad();
        }
    }
    if (!seen_digit) throw bad();
    if (neg) mant = -mant;
    const long long net = exp10 - frac_len;
    BigInt pow10 = 1;
    for (long long j = 0; j < std::llabs(net); ++j) pow10 *= 10;
    return net >= 0 ? Rational(mant * pow10) : Rational(mant, pow10);
}

template <class S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
    return parse_rational(text);
}

template <>
inline double parse_scalar<double>(std::string_view text) {
    if (text.find('/') != std::string_view::npos) return to_double(parse_rational(text));
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(std::string(text), &used);
    } catch (const std::exception&) {
        throw ParseError("cannot parse number: '" + std::string(text) + "'");
    }
    if (used != text.size())
        throw ParseError("trailing characters in number: '" + std::string(text) + "'");
    return v;
}

/// Round-trippable text form: "p/q" for rationals, shortest-faithful decimal
/// for doubles.
inline std::string format_scalar(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

inline std::string format_scalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace swor
