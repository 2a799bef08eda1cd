#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pentahole/geom.hpp"

namespace pentahole {

// Points file: one "x y" pair per line, '#' starts a comment line, blank
// lines ignored. Validation failures are reported with 1-based source lines.
PointSet parse_points(std::string_view text);

// Canonical text form; parse_points(emit_points(s)) == s.
std::string emit_points(const PointSet& s);

PointSet load_points_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

// n distinct grid points with |x|,|y| <= coord_max, no three collinear,
// resampling rejected candidates. Reproducible from the seed.
PointSet random_general_position(int n, std::uint64_t seed, std::int64_t coord_max = kCoordMax);

} // namespace pentahole
