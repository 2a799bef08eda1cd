// Shared internals of the hole finders; not part of the public surface.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pentahole/geom.hpp"
#include "pentahole/holes.hpp"

namespace pentahole::detail {

// Hull cycle of up to 16 points into a fixed buffer; returns vertex count.
// `out` must hold 2n entries (transient chain growth). Input must be free of
// duplicates and collinear triples.
int small_hull(const Point* pts, int n, Point* out);

// Convex position + no other configuration point strictly inside.
bool five_is_hole_in(const Point* five, const std::vector<Point>& host_pts);

// First (by lexicographic index order over the sorted configuration) empty
// convex pentagon of a small configuration, if any.
std::optional<std::vector<Point>> sweep_5subsets(std::vector<Point> cfg);

// Verify and wrap; throws ContractViolation if `five` is not a 5-hole of host.
Hole make_verified_hole(const std::vector<Point>& five, const PointSet& host);

// Structured workers. Preconditions on the hull size of cfg; each returns
// the 5 vertices of a hole of the configuration.
std::vector<Point> find5_hull6(std::vector<Point> cfg);      // hull >= 6
std::vector<Point> find5_hull5(std::vector<Point> cfg);      // hull == 5, interior >= 2
std::vector<Point> find5_hull4(std::vector<Point> cfg);      // hull == 4, interior >= 5

// Structured dispatch on an arbitrary small configuration; nullopt means
// "provably no 5-hole" only for the cases it fully decides, otherwise it
// falls back to the subset sweep.
std::optional<std::vector<Point>> find5_in_config(std::vector<Point> cfg);

// Smallest d >= 0 such that x + d*y is injective over S.
std::int64_t generic_direction(const std::vector<Point>& pts);

// Points ordered by ascending projection x + d*y.
std::vector<Point> projection_order(const std::vector<Point>& pts, std::int64_t d);

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

} // namespace pentahole::detail
