// udc/chart.hpp - deterministic SVG output: nested ring charts of class
// distributions and line charts of per-class or per-kind series.
//
// Geometry rules: ring segments start at 12 o'clock and run clockwise, one
// segment per class in label order, central angle proportional to the
// class's share of the ring. Identical inputs produce byte-identical SVG.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "udc/notation.hpp"

namespace udc {

class EmptyRing : public Error {
public:
    EmptyRing() : Error("ring has no records") {}
};

class EmptySeries : public Error {
public:
    EmptySeries() : Error("series chart has no data") {}
};

struct RingChartSpec {
    struct Ring {
        std::string label;
        std::map<std::string, std::uint64_t> counts;  // class code -> count
    };
    std::vector<Ring> rings;  // innermost first
    std::map<std::string, std::string> palette;
    int size = 480;  // pixels, square
};

struct SeriesChartSpec {
    enum class ValueKind { Count, Percentage };
    std::vector<std::string> x_labels;
    std::map<std::string, std::vector<double>> series;  // key -> one value per label
    ValueKind value_kind = ValueKind::Count;
    std::map<std::string, std::string> palette;
    int width = 640;
    int height = 400;
};

// Color per class code; "01" is drawn in the same color as "0" so the two
// read as one family.
inline std::map<std::string, std::string> default_palette() {
    return {
        {"0", "#4c78a8"}, {"01", "#4c78a8"}, {"1", "#f58518"}, {"2", "#e45756"},
        {"3", "#72b7b2"}, {"4", "#54a24b"},  {"5", "#eeca3b"}, {"6", "#b279a2"},
        {"7", "#ff9da6"}, {"8", "#9d755d"},  {"9", "#bab0ac"}, {"AUX", "#7f7f7f"},
    };
}

struct ArcSpan {
    std::string key;
    double start_deg;  // degrees clockwise from 12 o'clock
    double span_deg;

    bool operator==(const ArcSpan&) const = default;
};

// Angular layout of one ring; zero-count classes are dropped.
inline std::vector<ArcSpan> ring_angles(const std::map<std::string, std::uint64_t>& counts) {
    std::uint64_t total = 0;
    for (const auto& [key, count] : counts) total += count;
    if (total == 0) throw EmptyRing();
    std::vector<ArcSpan> arcs;
    double cursor = 0.0;
    for (const auto& [key, count] : counts) {
        if (count == 0) continue;
        double span = 360.0 * static_cast<double>(count) / static_cast<double>(total);
        arcs.push_back(ArcSpan{key, cursor, span});
        cursor += span;
    }
    return arcs;
}

namespace detail {

inline std::string fmt_num(double v) {
    // -0.0000 and 0.0000 must print alike
    if (v == 0.0) v = 0.0;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
    if (ec != std::errc()) return "0";
    return std::string(buf, end);
}

struct Point {
    double x, y;
};

inline Point on_circle(double cx, double cy, double r, double deg_from_top) {
    double rad = (deg_from_top - 90.0) * 3.14159265358979323846 / 180.0;
    return {cx + r * std::cos(rad), cy + r * std::sin(rad)};
}

inline void append_point(std::string& d, Point p) {
    d += fmt_num(p.x);
    d += ' ';
    d += fmt_num(p.y);
}

// Arc command chain from a0 to a1 (degrees from top, a1 >= a0), split so no
// single arc exceeds 180 degrees. sweep=1 walks clockwise, 0 back.
inline void append_arc(std::string& d, double cx, double cy, double r, double a0, double a1,
                       int sweep) {
    double span = a1 - a0;
    int pieces = span > 180.0 ? 2 : 1;
    for (int i = 1; i <= pieces; ++i) {
        double a = a0 + span * i / pieces;
        d += " A ";
        d += fmt_num(r);
        d += ' ';
        d += fmt_num(r);
        d += " 0 0 ";
        d += sweep ? '1' : '0';
        d += ' ';
        append_point(d, on_circle(cx, cy, r, a));
    }
}

inline std::string annular_sector_path(double cx, double cy, double r_in, double r_out,
                                       double a0, double a1) {
    std::string d = "M ";
    append_point(d, on_circle(cx, cy, r_out, a0));
    append_arc(d, cx, cy, r_out, a0, a1, 1);
    d += " L ";
    append_point(d, on_circle(cx, cy, r_in, a1));
    // walk the inner edge back
    std::string back;
    double span = a1 - a0;
    int pieces = span > 180.0 ? 2 : 1;
    for (int i = pieces - 1; i >= 0; --i) {
        double a = a0 + span * i / pieces;
        back += " A ";
        back += fmt_num(r_in);
        back += ' ';
        back += fmt_num(r_in);
        back += " 0 0 0 ";
        append_point(back, on_circle(cx, cy, r_in, a));
    }
    d += back;
    d += " Z";
    return d;
}

inline std::string palette_color(const std::map<std::string, std::string>& palette,
                                 const std::string& key) {
    auto it = palette.find(key);
    return it == palette.end() ? "#999999" : it->second;
}

inline void xml_escape_into(std::string& out, std::string_view s) {
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
}

inline std::string xml_escape(std::string_view s) {
    std::string out;
    xml_escape_into(out, s);
    return out;
}

}  // namespace detail

inline void emit_ring_svg(const RingChartSpec& spec, std::ostream& out) {
    if (spec.rings.empty()) throw EmptyRing();
    const double s = spec.size;
    const double cx = s / 2.0, cy = s / 2.0;
    const double outer = s / 2.0 - 10.0;
    const double hole = outer * 0.25;
    const double band = (outer - hole) / static_cast<double>(spec.rings.size());

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.size
        << "\" height=\"" << spec.size << "\" viewBox=\"0 0 " << spec.size << ' ' << spec.size
        << "\">\n";
    for (std::size_t i = 0; i < spec.rings.size(); ++i) {
        const RingChartSpec::Ring& ring = spec.rings[i];
        double r_in = hole + band * static_cast<double>(i);
        double r_out = r_in + band;
        out << "<g class=\"ring\" data-ring=\"" << i << "\" data-label=\""
            << detail::xml_escape(ring.label) << "\">\n";
        for (const ArcSpan& arc : ring_angles(ring.counts)) {
            out << "<path d=\""
                << detail::annular_sector_path(cx, cy, r_in, r_out, arc.start_deg,
                                               arc.start_deg + arc.span_deg)
                << "\" fill=\"" << detail::palette_color(spec.palette, arc.key)
                << "\" stroke=\"#ffffff\" stroke-width=\"1\" data-class=\""
                << detail::xml_escape(arc.key) << "\" data-count=\""
                << ring.counts.at(arc.key) << "\"/>\n";
        }
        out << "</g>\n";
    }
    // legend: class codes of the outermost ring, top-left column
    out << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
    int row = 0;
    for (const auto& [key, count] : spec.rings.back().counts) {
        if (count == 0) continue;
        double y = 14.0 + 16.0 * row++;
        out << "<rect x=\"6\" y=\"" << detail::fmt_num(y - 10.0)
            << "\" width=\"12\" height=\"12\" fill=\""
            << detail::palette_color(spec.palette, key) << "\"/>\n"
            << "<text x=\"22\" y=\"" << detail::fmt_num(y) << "\">" << detail::xml_escape(key)
            << "</text>\n";
    }
    out << "</g>\n</svg>\n";
}

inline std::string emit_ring_svg_string(const RingChartSpec& spec) {
    std::ostringstream out;
    emit_ring_svg(spec, out);
    return out.str();
}

inline void emit_series_svg(const SeriesChartSpec& spec, std::ostream& out) {
    if (spec.series.empty() || spec.x_labels.empty()) throw EmptySeries();
    for (const auto& [key, values] : spec.series)
        if (values.size() != spec.x_labels.size())
            throw Error("series \"" + key + "\" length does not match the label count");

    const double left = 56, right = 16, top = 16, bottom = 40;
    const double pw = spec.width - left - right;
    const double ph = spec.height - top - bottom;

    double y_max;
    if (spec.value_kind == SeriesChartSpec::ValueKind::Percentage) {
        y_max = 100.0;
    } else {
        y_max = 0.0;
        for (const auto& [key, values] : spec.series)
            for (double v : values) y_max = std::max(y_max, v);
        if (y_max <= 0.0) y_max = 1.0;
    }

    auto x_at = [&](std::size_t i) {
        if (spec.x_labels.size() == 1) return left + pw / 2.0;
        return left + pw * static_cast<double>(i) / static_cast<double>(spec.x_labels.size() - 1);
    };
    auto y_at = [&](double v) { return top + ph * (1.0 - v / y_max); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' '
        << spec.height << "\">\n";

    out << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int g = 0; g <= 4; ++g) {
        double v = y_max * g / 4.0;
        double y = y_at(v);
        out << "<line x1=\"" << detail::fmt_num(left) << "\" y1=\"" << detail::fmt_num(y)
            << "\" x2=\"" << detail::fmt_num(left + pw) << "\" y2=\"" << detail::fmt_num(y)
            << "\"/>\n";
    }
    out << "</g>\n<g class=\"axis-labels\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    for (int g = 0; g <= 4; ++g) {
        double v = y_max * g / 4.0;
        out << "<text x=\"" << detail::fmt_num(left - 6) << "\" y=\""
            << detail::fmt_num(y_at(v) + 4) << "\" text-anchor=\"end\">" << detail::fmt_num(v)
            << "</text>\n";
    }
    for (std::size_t i = 0; i < spec.x_labels.size(); ++i)
        out << "<text x=\"" << detail::fmt_num(x_at(i)) << "\" y=\""
            << detail::fmt_num(top + ph + 18) << "\" text-anchor=\"middle\">"
            << detail::xml_escape(spec.x_labels[i]) << "</text>\n";
    out << "</g>\n";

    for (const auto& [key, values] : spec.series) {
        std::string color = detail::palette_color(spec.palette, key);
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\" data-series=\"" << detail::xml_escape(key)
            << "\" points=\"";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i != 0) out << ' ';
            out << detail::fmt_num(x_at(i)) << ',' << detail::fmt_num(y_at(values[i]));
        }
        out << "\"/>\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            out << "<circle cx=\"" << detail::fmt_num(x_at(i)) << "\" cy=\""
                << detail::fmt_num(y_at(values[i])) << "\" r=\"3\" fill=\"" << color
                << "\" data-series=\"" << detail::xml_escape(key) << "\"/>\n";
    }
    out << "</svg>\n";
}

inline std::string emit_series_svg_string(const SeriesChartSpec& spec) {
    std::ostringstream out;
    emit_series_svg(spec, out);
    return out.str();
}

}  // namespace udc
