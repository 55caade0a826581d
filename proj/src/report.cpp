#include "dyadic/report.hpp"

#include <cmath>
#include <ostream>

namespace dyadic {
namespace {

nlohmann::ordered_json rational_json(const MaybeRational& r)
{
    if (!r)
        return "undefined";
    if (r->denominator() == 1)
        return r->numerator();
    return to_double(*r);
}

} // namespace

void write_phase_csv(const PhaseDiagram& d, std::ostream& out)
{
    out << "m10,m11,count\n";
    for (const auto& [cell, count] : d.cells)
        out << cell.first << ',' << cell.second << ',' << count << '\n';
}

void write_phase_svg(const PhaseDiagram& d, std::ostream& out)
{
    constexpr int cell = 12, margin = 40;
    std::int64_t max_m10 = 0, max_m11 = 0;
    std::uint64_t max_count = 0;
    for (const auto& [c, count] : d.cells) {
        max_m10 = std::max(max_m10, c.first);
        max_m11 = std::max(max_m11, c.second);
        max_count = std::max(max_count, count);
    }
    const std::int64_t cols = max_m10 + 1, rows = max_m11 + 1;
    const std::int64_t width = cols * cell + 2 * margin, height = rows * cell + 2 * margin;
    const double log_max = std::log1p(static_cast<double>(max_count));

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    // Empty grid: open squares are configurations that cannot occur.
    for (std::int64_t y = 0; y < rows; ++y)
        for (std::int64_t x = 0; x < cols; ++x)
            out << "<rect x=\"" << margin + x * cell << "\" y=\""
                << margin + (rows - 1 - y) * cell << "\" width=\"" << cell << "\" height=\""
                << cell << "\" fill=\"none\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    for (const auto& [c, count] : d.cells) {
        double t = log_max > 0 ? std::log1p(static_cast<double>(count)) / log_max : 1.0;
        int gray = static_cast<int>(std::lround(255.0 * (1.0 - t)));
        out << "<rect x=\"" << margin + c.first * cell << "\" y=\""
            << margin + (rows - 1 - c.second) * cell << "\" width=\"" << cell << "\" height=\""
            << cell << "\" fill=\"rgb(" << gray << ',' << gray << ',' << gray
            << ")\"><title>m10=" << c.first << " m11=" << c.second << " count=" << count
            << "</title></rect>\n";
    }
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - margin / 3
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">m10</text>\n";
    out << "<text x=\"" << margin / 3 << "\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 "
        << margin / 3 << ' ' << height / 2 << ")\">m11</text>\n";
    out << "<text x=\"" << margin << "\" y=\"" << margin / 2
        << "\" font-family=\"sans-serif\" font-size=\"12\">n1=" << d.n1 << "</text>\n";
    out << "</svg>\n";
}

void write_gain_csv(const std::vector<GainRow>& rows, std::ostream& out)
{
    out << "n1,area_old,area_new,gain_ub_m11,gain_ub_m10,gain_lb_m11,gain_lb_m10,gain_total\n";
    for (const auto& r : rows)
        out << r.n1 << ',' << format_number(r.area_old) << ',' << format_number(r.area_new) << ','
            << format_number(r.gain_ub_m11) << ',' << format_number(r.gain_ub_m10) << ','
            << format_number(r.gain_lb_m11) << ',' << format_number(r.gain_lb_m10) << ','
            << format_number(r.gain_total) << '\n';
}

void write_bounds_csv(const std::vector<BoundsReport>& rows, std::ostream& out)
{
    out << "n1,ub_m11_old,ub_m10_old,ub_m11,ub_m10,lb_m11,lb_m10,d_min,d_max,h_min,h_max\n";
    for (const auto& r : rows)
        out << r.n1 << ',' << r.ub_m11_old << ',' << r.ub_m10_old << ',' << r.ub_m11 << ','
            << r.ub_m10 << ',' << r.lb_m11 << ',' << r.lb_m10 << ',' << format_number(r.d_min)
            << ',' << format_number(r.d_max) << ',' << format_number(r.h_min) << ','
            << format_number(r.h_max) << '\n';
}

nlohmann::ordered_json bounds_json(const BoundsReport& r)
{
    nlohmann::ordered_json j;
    j["n1"] = r.n1;
    j["ub_m11_old"] = r.ub_m11_old;
    j["ub_m10_old"] = r.ub_m10_old;
    j["ub_m11"] = r.ub_m11;
    j["ub_m10"] = r.ub_m10;
    j["lb_m11"] = r.lb_m11;
    j["lb_m10"] = r.lb_m10;
    j["d_min"] = rational_json(r.d_min);
    j["d_max"] = rational_json(r.d_max);
    j["h_min"] = rational_json(r.h_min);
    j["h_max"] = rational_json(r.h_max);
    return j;
}

nlohmann::ordered_json metrics_json(const Graph& g, const CharacteristicAssignment& a)
{
    const auto n = static_cast<std::int64_t>(g.node_count());
    const auto m = static_cast<std::int64_t>(g.edge_count());
    DyadCounts counts = count_dyads(g, a);
    nlohmann::ordered_json j;
    j["N"] = n;
    j["M"] = m;
    j["n1"] = a.n1();
    j["n0"] = a.n0();
    j["m11"] = counts.m11;
    j["m10"] = counts.m10;
    j["m00"] = counts.m00;
    if (n >= 2) {
        DyadStats stats = expected_dyads(n, m, static_cast<std::int64_t>(a.n1()));
        DyadicEffect effect = dyadicity_heterophilicity(counts, stats);
        j["density"] = rational_json(stats.density);
        j["expected_m11"] = rational_json(stats.expected_m11);
        j["expected_m10"] = rational_json(stats.expected_m10);
        j["D"] = rational_json(effect.dyadicity);
        j["H"] = rational_json(effect.heterophilicity);
    } else {
        for (const char* key : {"density", "expected_m11", "expected_m10", "D", "H"})
            j[key] = "undefined";
    }
    return j;
}

void write_expected_csv(std::int64_t node_count, const std::vector<Rational>& densities,
                        std::ostream& out)
{
    out << "n1,fraction,density,expected_m11,expected_m10\n";
    for (const Rational& delta : densities)
        for (std::int64_t n1 = 0; n1 <= node_count; ++n1) {
            DyadStats s = expected_dyads_for_density(node_count, delta, n1);
            out << n1 << ',' << format_number(Rational(n1, node_count)) << ','
                << format_number(delta) << ',' << format_number(s.expected_m11) << ','
                << format_number(s.expected_m10) << '\n';
        }
}

} // namespace dyadic
