#include "pentahole/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "pentahole/io.hpp"

namespace pentahole {

namespace {

const char* kFills[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_svg(const PointSet& s, const SvgOverlays& overlays) {
    std::int64_t minx = s[0].x, maxx = s[0].x, miny = s[0].y, maxy = s[0].y;
    for (const Point& p : s.points()) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const double w = std::max<double>(static_cast<double>(maxx - minx), 1.0);
    const double h = std::max<double>(static_cast<double>(maxy - miny), 1.0);
    const double margin = 0.05 * std::max(w, h);
    // y axis flipped so larger y draws upward
    const double vb_x = static_cast<double>(minx) - margin;
    const double vb_y = -static_cast<double>(maxy) - margin;
    const double vb_w = w + 2 * margin;
    const double vb_h = h + 2 * margin;
    const double r = std::max(vb_w, vb_h) / 120.0;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(vb_x) + " " + num(vb_y) +
           " " + num(vb_w) + " " + num(vb_h) + "\">\n";
    std::size_t color = 0;
    for (const std::vector<Point>& poly : overlays.polygons) {
        out += "  <polygon points=\"";
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (i) out += ' ';
            out += num(static_cast<double>(poly[i].x)) + "," +
                   num(-static_cast<double>(poly[i].y));
        }
        out += "\" fill=\"";
        out += kFills[color % (sizeof kFills / sizeof *kFills)];
        out += "\" fill-opacity=\"0.35\" stroke=\"";
        out += kFills[color % (sizeof kFills / sizeof *kFills)];
        out += "\" stroke-width=\"" + num(r / 3) + "\"/>\n";
        ++color;
    }
    for (const auto& [p, q] : overlays.lines) {
        // extend well past the view box
        const double dx = static_cast<double>(q.x - p.x);
        const double dy = static_cast<double>(q.y - p.y);
        const double len = std::max(1.0, std::max(std::abs(dx), std::abs(dy)));
        const double t = 3.0 * std::max(vb_w, vb_h) / len;
        out += "  <line x1=\"" + num(p.x - t * dx) + "\" y1=\"" + num(-(p.y - t * dy)) +
               "\" x2=\"" + num(q.x + t * dx) + "\" y2=\"" + num(-(q.y + t * dy)) +
               "\" stroke=\"#444444\" stroke-width=\"" + num(r / 3) +
               "\" stroke-dasharray=\"" + num(2 * r) + " " + num(r) + "\"/>\n";
    }
    for (const Point& p : s.points()) {
        out += "  <circle cx=\"" + num(static_cast<double>(p.x)) + "\" cy=\"" +
               num(-static_cast<double>(p.y)) + "\" r=\"" + num(r) + "\" fill=\"#111111\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

void render_svg_file(const PointSet& s, const SvgOverlays& overlays, const std::string& path) {
    write_file(path, render_svg(s, overlays));
}

} // namespace pentahole
