#include "pentahole/geom.hpp"

#include <algorithm>
#include <cstdio>

namespace pentahole {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DuplicatePoint: return "DuplicatePoint";
        case Errc::CollinearTriple: return "CollinearTriple";
        case Errc::CoordinateOverflow: return "CoordinateOverflow";
        case Errc::TooFewPoints: return "TooFewPoints";
        case Errc::WitnessOnLine: return "WitnessOnLine";
        case Errc::NotEnoughPointsInRegion: return "NotEnoughPointsInRegion";
        case Errc::SubsetNotInHost: return "SubsetNotInHost";
        case Errc::PointNotInSet: return "PointNotInSet";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::HullTooSmall: return "HullTooSmall";
        case Errc::NoConvexHexagonFound: return "NoConvexHexagonFound";
        case Errc::ParseError: return "ParseError";
        case Errc::Unsatisfiable: return "Unsatisfiable";
        case Errc::IoError: return "IoError";
        case Errc::NotADoublingSize: return "NotADoublingSize";
        case Errc::BudgetExceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& msg, std::vector<long long> args)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code),
      args_(std::move(args)) {}

void fail(Errc code, const std::string& msg, std::vector<long long> args) {
    throw Error(code, msg, std::move(args));
}

// ---------------------------------------------------------------------------
// PointSet

namespace {

std::uint64_t fnv1a64(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t digest_points(const std::vector<Point>& pts) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const Point& p : pts) {
        h = fnv1a64(h, static_cast<std::uint64_t>(p.x));
        h = fnv1a64(h, static_cast<std::uint64_t>(p.y));
    }
    return h;
}

} // namespace

PointSet::PointSet(std::vector<Point> sorted_pts)
    : pts_(std::move(sorted_pts)), digest_(digest_points(pts_)) {}

PointSet PointSet::unchecked(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    return PointSet(std::move(pts));
}

bool PointSet::contains(Point p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::ptrdiff_t PointSet::index_of(Point p) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    if (it == pts_.end() || !(*it == p)) return -1;
    return it - pts_.begin();
}

std::string PointSet::digest_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest_));
    return std::string(buf);
}

PointSet validate_general_position(const std::vector<Point>& pts) {
    const std::size_t n = pts.size();
    if (n == 0) fail(Errc::TooFewPoints, "point list is empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (pts[i].x < -kCoordMax || pts[i].x > kCoordMax || pts[i].y < -kCoordMax ||
            pts[i].y > kCoordMax) {
            fail(Errc::CoordinateOverflow, "coordinate out of range at index " + std::to_string(i),
                 {static_cast<long long>(i)});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (pts[i] == pts[j]) {
                fail(Errc::DuplicatePoint,
                     "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide",
                     {static_cast<long long>(i), static_cast<long long>(j)});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (orientation(pts[i], pts[j], pts[k]) == Orient::Collinear) {
                    fail(Errc::CollinearTriple,
                         "points " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                             std::to_string(k) + " are collinear",
                         {static_cast<long long>(i), static_cast<long long>(j),
                          static_cast<long long>(k)});
                }
            }
        }
    }
    return PointSet::unchecked(pts);
}

// ---------------------------------------------------------------------------
// Hulls

std::vector<Point> hull_cycle(std::span<const Point> pts) {
    std::vector<Point> p(pts.begin(), pts.end());
    std::sort(p.begin(), p.end());
    const std::size_t n = p.size();
    if (n <= 2) return p;

    std::vector<Point> h;
    h.reserve(2 * n);
    for (const Point& q : p) { // lower chain
        while (h.size() >= 2 && cross(h[h.size() - 2], h[h.size() - 1], q) <= 0) h.pop_back();
        h.push_back(q);
    }
    const std::size_t lower = h.size() + 1;
    for (std::size_t i = n - 1; i-- > 0;) { // upper chain
        const Point& q = p[i];
        while (h.size() >= lower && cross(h[h.size() - 2], h[h.size() - 1], q) <= 0) h.pop_back();
        h.push_back(q);
    }
    h.pop_back(); // closing duplicate of the start
    return h;
}

ConvexPolygon ConvexPolygon::hull_of(std::span<const Point> pts) {
    std::vector<Point> cyc = hull_cycle(pts);
    if (cyc.size() < 3)
        fail(Errc::TooFewPoints, "hull has fewer than 3 vertices");
    return ConvexPolygon(std::move(cyc));
}

ConvexPolygon ConvexPolygon::from_cycle(std::vector<Point> verts) {
    const std::size_t n = verts.size();
    if (n < 3) fail(Errc::TooFewPoints, "polygon needs at least 3 vertices");
    std::vector<Point> canon = hull_cycle(verts);
    if (canon.size() != n)
        fail(Errc::PreconditionViolated, "vertices are not in strictly convex position");
    // The input must trace the same cycle, possibly rotated or reversed.
    auto it = std::find(canon.begin(), canon.end(), verts[0]);
    const std::size_t off = static_cast<std::size_t>(it - canon.begin());
    bool fwd = true, rev = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(verts[i] == canon[(off + i) % n])) fwd = false;
        if (!(verts[i] == canon[(off + n - i) % n])) rev = false;
    }
    if (!fwd && !rev)
        fail(Errc::PreconditionViolated, "vertex order does not trace the convex cycle");
    return ConvexPolygon(std::move(canon));
}

ConvexPolygon convex_hull(const PointSet& s) {
    if (s.size() < 3) fail(Errc::TooFewPoints, "need at least 3 points for a hull");
    return ConvexPolygon::hull_of(s.points());
}

PointLocation locate_in_hull(Point p, std::span<const Point> cycle) {
    const std::size_t n = cycle.size();
    if (n == 0) return PointLocation::Outside;
    if (n == 1) return p == cycle[0] ? PointLocation::OnBoundary : PointLocation::Outside;
    if (n == 2)
        return point_on_segment(p, cycle[0], cycle[1]) ? PointLocation::OnBoundary
                                                       : PointLocation::Outside;
    bool boundary = false;
    for (std::size_t i = 0; i < n; ++i) {
        const int s = orient_sign(cycle[i], cycle[(i + 1) % n], p);
        if (s < 0) return PointLocation::Outside;
        if (s == 0) boundary = true;
    }
    return boundary ? PointLocation::OnBoundary : PointLocation::StrictInside;
}

PointLocation point_in_convex_polygon(Point p, const ConvexPolygon& poly) {
    return locate_in_hull(p, poly.vertices());
}

std::string LayerSignature::to_string() const {
    std::string s = "L{";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(counts[i]);
    }
    s += '}';
    return s;
}

ConvexLayers convex_layers(const PointSet& s) {
    if (s.size() == 0) fail(Errc::TooFewPoints, "empty set has no layers");
    ConvexLayers out;
    std::vector<Point> work = s.points();
    while (!work.empty()) {
        if (work.size() <= 2) {
            out.signature.counts.push_back(static_cast<int>(work.size()));
            out.layers.push_back(std::move(work));
            work.clear();
            break;
        }
        std::vector<Point> cyc = hull_cycle(work);
        out.signature.counts.push_back(static_cast<int>(cyc.size()));
        std::vector<Point> on_hull = cyc;
        std::sort(on_hull.begin(), on_hull.end());
        std::vector<Point> rest;
        rest.reserve(work.size() - cyc.size());
        for (const Point& p : work)
            if (!std::binary_search(on_hull.begin(), on_hull.end(), p)) rest.push_back(p);
        out.layers.push_back(std::move(cyc));
        work = std::move(rest);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Segment predicates and disjointness

bool point_on_segment(Point p, Point a, Point b) {
    if (orient_sign(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect_closed(Point a, Point b, Point c, Point d) {
    const int d1 = orient_sign(c, d, a);
    const int d2 = orient_sign(c, d, b);
    const int d3 = orient_sign(a, b, c);
    const int d4 = orient_sign(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    return (d1 == 0 && point_on_segment(a, c, d)) || (d2 == 0 && point_on_segment(b, c, d)) ||
           (d3 == 0 && point_on_segment(c, a, b)) || (d4 == 0 && point_on_segment(d, a, b));
}

namespace {

// Some edge of `a` with all of `b` strictly on its outer (right) side.
bool has_separating_edge(std::span<const Point> a, std::span<const Point> b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& u = a[i];
        const Point& v = a[(i + 1) % n];
        bool all_out = true;
        for (const Point& q : b) {
            if (orient_sign(u, v, q) >= 0) {
                all_out = false;
                break;
            }
        }
        if (all_out) return true;
    }
    return false;
}

} // namespace

bool convex_polygons_disjoint(const ConvexPolygon& a, const ConvexPolygon& b) {
    return has_separating_edge(a.vertices(), b.vertices()) ||
           has_separating_edge(b.vertices(), a.vertices());
}

bool convex_regions_disjoint(std::span<const Point> a, std::span<const Point> b) {
    if (a.empty() || b.empty()) return true;
    if (a.size() >= 3 && b.size() >= 3)
        return has_separating_edge(a, b) || has_separating_edge(b, a);
    for (const Point& p : a)
        if (locate_in_hull(p, b) != PointLocation::Outside) return false;
    for (const Point& p : b)
        if (locate_in_hull(p, a) != PointLocation::Outside) return false;
    if (a.size() >= 2 && b.size() >= 2) {
        const std::size_t na = a.size() >= 3 ? a.size() : 1;
        const std::size_t nb = b.size() >= 3 ? b.size() : 1;
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                if (segments_intersect_closed(a[i], a[(i + 1) % a.size()], b[j],
                                              b[(j + 1) % b.size()]))
                    return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Halfplanes, cones, angular order

bool region_contains(const Region& r, Point p) {
    if (const Halfplane* h = std::get_if<Halfplane>(&r)) {
        const int ws = orient_sign(h->a, h->b, h->witness);
        if (ws == 0) fail(Errc::WitnessOnLine, "halfplane witness lies on the boundary line");
        const int s = orient_sign(h->a, h->b, p);
        return s == ws || (h->closed && s == 0);
    }
    const Cone& c = std::get<Cone>(r);
    const int s1 = orient_sign(c.apex, c.toward_first, c.toward_second);
    if (s1 == 0) fail(Errc::PreconditionViolated, "degenerate cone");
    return orient_sign(c.apex, c.toward_first, p) == s1 &&
           orient_sign(c.apex, c.toward_second, p) == -s1;
}

PointSet halfplane_points(Point p, Point q, Point side_witness, bool closed, const PointSet& s) {
    const int ws = orient_sign(p, q, side_witness);
    if (ws == 0) fail(Errc::WitnessOnLine, "side witness lies on line pq");
    std::vector<Point> out;
    for (const Point& t : s.points()) {
        const int ts = orient_sign(p, q, t);
        if (ts == ws || (closed && ts == 0)) out.push_back(t);
    }
    return PointSet::unchecked(std::move(out));
}

namespace {

// 0: on the ray, 1: left halfplane, 2: on the opposite ray, 3: right halfplane.
int angular_band(Point apex, Point dir, Point p) {
    const int s = orient_sign(apex, dir, p);
    if (s > 0) return 1;
    if (s < 0) return 3;
    const std::int64_t dot =
        (dir.x - apex.x) * (p.x - apex.x) + (dir.y - apex.y) * (p.y - apex.y);
    return dot > 0 ? 0 : 2;
}

} // namespace

std::vector<Point> angular_sweep(Point apex, Point dir_target, std::span<const Point> candidates) {
    std::vector<Point> out(candidates.begin(), candidates.end());
    std::sort(out.begin(), out.end(), [&](const Point& l, const Point& r) {
        const int bl = angular_band(apex, dir_target, l);
        const int br = angular_band(apex, dir_target, r);
        if (bl != br) return bl < br;
        return cross(apex, l, r) > 0;
    });
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (angular_band(apex, dir_target, out[i - 1]) ==
                angular_band(apex, dir_target, out[i]) &&
            orient_sign(apex, out[i - 1], out[i]) == 0)
            throw ContractViolation("angular tie: two candidates collinear with the apex");
    }
    return out;
}

Point kth_angular_neighbor(Point apex, Point ray_target, const Region& region, int k,
                           const PointSet& s) {
    if (k < 1) fail(Errc::PreconditionViolated, "k must be positive");
    std::vector<Point> in_region;
    for (const Point& p : s.points()) {
        if (p == apex || p == ray_target) continue;
        if (region_contains(region, p)) in_region.push_back(p);
    }
    if (static_cast<int>(in_region.size()) < k)
        fail(Errc::NotEnoughPointsInRegion,
             "region holds " + std::to_string(in_region.size()) + " points, need " +
                 std::to_string(k));
    return angular_sweep(apex, ray_target, in_region)[static_cast<std::size_t>(k - 1)];
}

} // namespace pentahole
