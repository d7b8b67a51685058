#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "swor/bounds.hpp"

namespace swor {

/// One (k, ε) cell of the bound-comparison table: both sample-average bounds
/// next to the absolute-deviation bound at t = εk.
struct CompareRow {
    long k = 0;
    double eps = 0.0;
    BoundResult bm_serfling;
    BoundResult bm_bernstein;
    BoundResult abs_dev;
};

/// Builds the comparison grid for a worst-case population of half absolute
/// deviation α: b−a = 2α and σ² = 2α² are substituted, the k sweep covers
/// 1..n−1 for each ε. Rows whose bound precondition fails carry inapplicable
/// results (emitted blank in the CSV).
inline std::vector<CompareRow> comparison_rows(long n, double alpha,
                                               const std::vector<double>& eps_list,
                                               double delta) {
    if (n < 3) throw DomainError("comparison needs n >= 3");
    if (!(alpha > 0)) throw DomainError("comparison needs alpha > 0");
    std::vector<CompareRow> rows;
    rows.reserve(eps_list.size() * static_cast<std::size_t>(n - 1));
    const double a = -alpha, b = alpha, sigma2 = 2.0 * alpha * alpha;
    for (double eps : eps_list) {
        if (!(eps > 0)) throw DomainError("comparison needs eps > 0");
        for (long k = 1; k <= n - 1; ++k) {
            CompareRow row;
            row.k = k;
            row.eps = eps;
            row.bm_serfling = bm_serfling_upper(n, k, a, b, eps);
            row.bm_bernstein = bm_bernstein_upper(n, k, a, b, sigma2, eps, delta);
            row.abs_dev = abs_dev_upper(n, k, alpha, eps * static_cast<double>(k));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace detail {

inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace detail

inline constexpr const char* kCompareCsvHeader =
    "k,eps,bm_serfling,bm_serfling_raw,bm_bernstein,bm_bernstein_raw,abs_dev_upper";

/// Fixed-order CSV; inapplicable cells are blank. The leading comment pins
/// the configuration, including the δ that the Bernstein column consumed.
inline void write_comparison_csv(std::ostream& os, const std::vector<CompareRow>& rows,
                                 long n, double alpha, double delta) {
    os << "# n=" << detail::csv_number(static_cast<double>(n))
       << " alpha=" << detail::csv_number(alpha) << " delta=" << detail::csv_number(delta)
       << " (worst case: b-a=2*alpha, sigma2=2*alpha^2)\n";
    os << kCompareCsvHeader << "\n";
    for (const CompareRow& r : rows) {
        os << r.k << "," << detail::csv_number(r.eps) << ",";
        if (r.bm_serfling.applicable)
            os << detail::csv_number(r.bm_serfling.value) << ","
               << detail::csv_number(r.bm_serfling.raw) << ",";
        else
            os << ",,";
        if (r.bm_bernstein.applicable)
            os << detail::csv_number(r.bm_bernstein.value) << ","
               << detail::csv_number(r.bm_bernstein.raw) << ",";
        else
            os << ",,";
        if (r.abs_dev.applicable) os << detail::csv_number(r.abs_dev.value);
        os << "\n";
    }
}

/// Self-contained SVG line chart for a single ε: clamped bound values against
/// k on linear axes. The CSV stays the canonical artifact; this is a
/// convenience rendering.
inline void write_comparison_svg(std::ostream& os, const std::vector<CompareRow>& rows,
                                 long n, double eps, double delta) {
    const double width = 640, height = 400;
    const double left = 62, right = 618, top = 30, bottom = 355;
    const auto x_of = [&](double k) {
        return left + (k - 1.0) / (static_cast<double>(n - 1) - 1.0) * (right - left);
    };
    const auto y_of = [&](double v) { return bottom - v * (bottom - top); };
    const auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << (width / 2) << "\" y=\"18\" text-anchor=\"middle\">upper bounds on "
          "P(average of k sampled values &#8805; " << fmt(eps) << "), delta=" << fmt(delta)
       << "</text>\n";
    // Axes and gridlines.
    for (int tick = 0; tick <= 4; ++tick) {
        const double v = tick / 4.0, y = y_of(v);
        os << "<line x1=\"" << left << "\" y1=\"" << fmt(y) << "\" x2=\"" << right << "\" y2=\""
           << fmt(y) << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << (left - 8) << "\" y=\"" << fmt(y + 4)
           << "\" text-anchor=\"end\">" << fmt(v) << "</text>\n";
    }
    for (int tick = 0; tick <= 5; ++tick) {
        const double k = 1.0 + tick / 5.0 * (static_cast<double>(n - 1) - 1.0);
        os << "<text x=\"" << fmt(x_of(k)) << "\" y=\"" << (bottom + 18)
           << "\" text-anchor=\"middle\">" << static_cast<long>(k + 0.5) << "</text>\n";
    }
    os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << bottom
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\""
       << bottom << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << (width / 2) << "\" y=\"" << (height - 12)
       << "\" text-anchor=\"middle\">k</text>\n";

    struct Series {
        const char* label;
        const char* color;
        const BoundResult CompareRow::*member;
    };
    const Series series[3] = {{"bm_serfling", "#1f77b4", &CompareRow::bm_serfling},
                              {"bm_bernstein", "#ff7f0e", &CompareRow::bm_bernstein},
                              {"abs_dev_upper", "#2ca02c", &CompareRow::abs_dev}};
    int legend_row = 0;
    for (const Series& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (const CompareRow& r : rows) {
            const BoundResult& b = r.*(s.member);
            if (!b.applicable) continue;
            os << fmt(x_of(static_cast<double>(r.k))) << "," << fmt(y_of(b.value)) << " ";
        }
        os << "\"/>\n";
        const double ly = top + 16 + 16 * legend_row++;
        os << "<line x1=\"" << (left + 12) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
           << (left + 36) << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << s.color
           << "\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << (left + 42) << "\" y=\"" << fmt(ly) << "\">" << s.label
           << "</text>\n";
    }
    os << "</svg>\n";
}

} // namespace swor
