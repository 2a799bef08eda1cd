#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pentahole/error.hpp"

namespace pentahole {

// Coordinates are capped so every degree-2 determinant fits in a signed
// 64-bit intermediate with ample headroom: 8*(2*kCoordMax)^2 < 2^63.
inline constexpr std::int64_t kCoordMax = 1'000'000;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(Point a, Point b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

enum class Orient : int { CW = -1, Collinear = 0, CCW = +1 };

// (q-p) x (r-p), exact.
inline std::int64_t cross(Point p, Point q, Point r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

inline Orient orientation(Point p, Point q, Point r) {
    const std::int64_t c = cross(p, q, r);
    return c > 0 ? Orient::CCW : (c < 0 ? Orient::CW : Orient::Collinear);
}

inline int orient_sign(Point p, Point q, Point r) {
    const std::int64_t c = cross(p, q, r);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

// Immutable general-position point set in canonical order (ascending x, then y).
class PointSet {
public:
    const std::vector<Point>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    bool contains(Point p) const;
    // Index in canonical order, or -1.
    std::ptrdiff_t index_of(Point p) const;
    std::uint64_t digest() const { return digest_; }
    std::string digest_hex() const;

    // Adopts points known to be in general position (e.g. a subset of a
    // validated set); sorts into canonical order, no validation.
    static PointSet unchecked(std::vector<Point> pts);

private:
    explicit PointSet(std::vector<Point> sorted_pts);
    std::vector<Point> pts_;
    std::uint64_t digest_ = 0;
};

// Rejects duplicates, collinear triples and out-of-range coordinates.
// Error args refer to positions in the input list.
PointSet validate_general_position(const std::vector<Point>& pts);

// Strictly convex CCW cycle, rotated so the lexicographic minimum comes first.
class ConvexPolygon {
public:
    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point& operator[](std::size_t i) const { return verts_[i]; }

    // Validates convexity/orientation; accepts any rotation or direction of
    // the cycle and canonicalizes it.
    static ConvexPolygon from_cycle(std::vector<Point> verts);
    // Hull of an arbitrary general-position set; throws TooFewPoints if the
    // hull has fewer than 3 vertices.
    static ConvexPolygon hull_of(std::span<const Point> pts);

private:
    explicit ConvexPolygon(std::vector<Point> canonical) : verts_(std::move(canonical)) {}
    std::vector<Point> verts_;
};

// Hull cycle of a general-position set: CCW from the lexicographic minimum.
// Size 1 and 2 inputs come back as-is (degenerate "hulls").
std::vector<Point> hull_cycle(std::span<const Point> pts);

ConvexPolygon convex_hull(const PointSet& s);

enum class PointLocation { StrictInside, OnBoundary, Outside };

PointLocation point_in_convex_polygon(Point p, const ConvexPolygon& poly);
// Same classification against a possibly degenerate hull cycle (1+ vertices).
PointLocation locate_in_hull(Point p, std::span<const Point> cycle);

struct LayerSignature {
    std::vector<int> counts;
    friend bool operator==(const LayerSignature& a, const LayerSignature& b) {
        return a.counts == b.counts;
    }
    std::string to_string() const; // "L{3,5,1}"
};

struct ConvexLayers {
    // Outermost first; each layer a CCW cycle, except a final layer of size
    // 1 or 2 which is kept in canonical order and has no polygon.
    std::vector<std::vector<Point>> layers;
    LayerSignature signature;
};

ConvexLayers convex_layers(const PointSet& s);

// Closed-region disjointness of two convex polygons, decided by a
// separating-edge search over the edges of both (orientation tests only).
bool convex_polygons_disjoint(const ConvexPolygon& a, const ConvexPolygon& b);

// General form: hull cycles of size >= 1 (points and segments allowed).
bool convex_regions_disjoint(std::span<const Point> a, std::span<const Point> b);

bool point_on_segment(Point p, Point a, Point b);
// Closed segments: endpoint contact counts as intersecting.
bool segments_intersect_closed(Point a, Point b, Point c, Point d);

// Open halfplane bounded by line ab containing `witness`; `closed` adds the
// line itself. Membership by one orientation test.
struct Halfplane {
    Point a, b, witness;
    bool closed = false;
};

// Strict interior of the angular domain at `apex` between the rays toward
// `toward_first` and `toward_second` (angle < pi). Two orientation tests.
struct Cone {
    Point apex, toward_first, toward_second;
};

using Region = std::variant<Halfplane, Cone>;

bool region_contains(const Region& r, Point p);

// Points of S strictly (or weakly) on the witness side of line pq.
PointSet halfplane_points(Point p, Point q, Point side_witness, bool closed, const PointSet& s);

// Candidates sorted by CCW angle around `apex` starting at the direction of
// ray apex->dir_target. Resolved purely by orientation signs.
std::vector<Point> angular_sweep(Point apex, Point dir_target, std::span<const Point> candidates);

// The unique point of S inside `region` with exactly k-1 region points at a
// smaller angle from ray apex->ray_target (apex/ray_target never counted).
Point kth_angular_neighbor(Point apex, Point ray_target, const Region& region, int k,
                           const PointSet& s);

} // namespace pentahole
