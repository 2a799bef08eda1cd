#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pentahole/geom.hpp"

namespace pentahole {

struct SvgOverlays {
    std::vector<std::vector<Point>> polygons; // filled translucent cycles
    std::vector<std::pair<Point, Point>> lines; // dashed, extended separators
};

// Deterministic figure: points as circles, polygons shaded, separators
// dashed; viewBox fitted with a 5% margin.
std::string render_svg(const PointSet& s, const SvgOverlays& overlays);

void render_svg_file(const PointSet& s, const SvgOverlays& overlays, const std::string& path);

} // namespace pentahole
