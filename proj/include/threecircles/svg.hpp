#pragma once

// SVG rendering of an interval, its discs and a set of points. Geometry is
// converted to double here; this is a picture, not a certificate.

#include "threecircles/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace threecircles {

struct SvgCircle {
    double cx, cy, radius;
    std::string label;
    std::string stroke;
};

/// C0, C1, C2 when k is empty; otherwise the two Obreshkoff discs for k.
inline std::vector<SvgCircle> disc_geometry(const IntervalLR& iv, std::optional<unsigned> k) {
    const double l = iv.l().get_d(), r = iv.r().get_d();
    const double m = (l + r) / 2, half = (r - l) / 2;
    std::vector<SvgCircle> out;
    if (!k) {
        const double h = obreshkoff_center_height(l, r, 1);
        const double big = std::sqrt(half * half + h * h);
        out.push_back({m, 0.0, half, "C0", "#1f77b4"});
        out.push_back({m, h, big, "C1", "#d62728"});
        out.push_back({m, -h, big, "C2", "#2ca02c"});
    } else {
        const double h = obreshkoff_center_height(l, r, *k);
        const double rad = std::sqrt(half * half + h * h);
        const std::string tag = std::to_string(*k);
        out.push_back({m, h, rad, "upper disc k=" + tag, "#d62728"});
        out.push_back({m, -h, rad, "lower disc k=" + tag, "#2ca02c"});
    }
    return out;
}

namespace detail {

inline std::string fmt_num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

}  // namespace detail

inline std::string render_svg(const IntervalLR& iv, std::optional<unsigned> k,
                              const std::vector<ComplexRational>& points) {
    const auto circles = disc_geometry(iv, k);
    const double l = iv.l().get_d(), r = iv.r().get_d();
    double x0 = l, x1 = r, y0 = 0, y1 = 0;
    for (const auto& c : circles) {
        x0 = std::min(x0, c.cx - c.radius);
        x1 = std::max(x1, c.cx + c.radius);
        y0 = std::min(y0, c.cy - c.radius);
        y1 = std::max(y1, c.cy + c.radius);
    }
    for (const auto& p : points) {
        x0 = std::min(x0, p.re.get_d());
        x1 = std::max(x1, p.re.get_d());
        y0 = std::min(y0, p.im.get_d());
        y1 = std::max(y1, p.im.get_d());
    }
    const double margin = 0.05 * std::max(x1 - x0, y1 - y0);
    x0 -= margin;
    x1 += margin;
    y0 -= margin;
    y1 += margin;

    const double width_px = 600.0;
    const double scale = width_px / (x1 - x0);
    const double height_px = (y1 - y0) * scale;
    auto sx = [&](double x) { return detail::fmt_num((x - x0) * scale); };
    auto sy = [&](double y) { return detail::fmt_num((y1 - y) * scale); };
    using detail::fmt_num;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_num(width_px) + "\" height=\"" +
           fmt_num(height_px) + "\" viewBox=\"0 0 " + fmt_num(width_px) + " " + fmt_num(height_px) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "  <line class=\"axis\" x1=\"0\" y1=\"" + sy(0) + "\" x2=\"" + fmt_num(width_px) + "\" y2=\"" + sy(0) +
           "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    for (const auto& c : circles) {
        const std::string rad = fmt_num(c.radius * scale);
        out += "  <path class=\"disc\" data-label=\"" + c.label + "\" d=\"M " + sx(c.cx - c.radius) + " " + sy(c.cy) +
               " A " + rad + " " + rad + " 0 1 0 " + sx(c.cx + c.radius) + " " + sy(c.cy) + " A " + rad + " " + rad +
               " 0 1 0 " + sx(c.cx - c.radius) + " " + sy(c.cy) + " Z\" fill=\"none\" stroke=\"" + c.stroke +
               "\" stroke-width=\"1.5\"/>\n";
    }
    out += "  <line class=\"interval\" x1=\"" + sx(l) + "\" y1=\"" + sy(0) + "\" x2=\"" + sx(r) + "\" y2=\"" + sy(0) +
           "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    for (const auto& p : points)
        out += "  <circle class=\"point\" cx=\"" + sx(p.re.get_d()) + "\" cy=\"" + sy(p.im.get_d()) +
               "\" r=\"3\" fill=\"black\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace threecircles
