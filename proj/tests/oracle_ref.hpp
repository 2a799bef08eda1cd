// Test-side reference implementations, kept independent of the library's
// code paths so they can act as oracles for it.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "pentahole/geom.hpp"

namespace oracle_ref {

using pentahole::Point;

inline std::int64_t cross3(Point a, Point b, Point c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Convex position: every point is extreme, i.e. no point inside or on the
// triangle of any three others.
inline bool convex_position(std::span<const Point> pts) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    if (m == i || m == j || m == k) continue;
                    std::int64_t s1 = cross3(pts[i], pts[j], pts[m]);
                    std::int64_t s2 = cross3(pts[j], pts[k], pts[m]);
                    std::int64_t s3 = cross3(pts[k], pts[i], pts[m]);
                    if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0))
                        return false;
                }
    return true;
}

// Point strictly inside the convex hull of `pts`, by triangle-fan membership
// against every triple.
inline bool strictly_inside_hull(Point q, std::span<const Point> pts) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::int64_t s1 = cross3(pts[i], pts[j], q);
                std::int64_t s2 = cross3(pts[j], pts[k], q);
                std::int64_t s3 = cross3(pts[k], pts[i], q);
                if ((s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0)) return true;
            }
    return false;
}

// Emptiness per the definition: subset in convex position, no host point
// strictly inside its hull.
inline bool is_empty_convex_ref(std::span<const Point> subset,
                                std::span<const Point> host) {
    if (!convex_position(subset)) return false;
    for (const Point& q : host) {
        bool is_vertex = false;
        for (const Point& v : subset)
            if (q == v) { is_vertex = true; break; }
        if (!is_vertex && strictly_inside_hull(q, subset)) return false;
    }
    return true;
}

// Closed-region overlap of two convex vertex cycles via pairwise segment
// intersections plus mutual containment probes.
inline bool regions_intersect_ref(std::span<const Point> a, std::span<const Point> b) {
    auto on_seg = [](Point p, Point u, Point v) {
        return cross3(u, v, p) == 0 && std::min(u.x, v.x) <= p.x && p.x <= std::max(u.x, v.x) &&
               std::min(u.y, v.y) <= p.y && p.y <= std::max(u.y, v.y);
    };
    auto seg_hit = [&](Point p1, Point p2, Point q1, Point q2) {
        auto sgn = [](std::int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
        int d1 = sgn(cross3(q1, q2, p1)), d2 = sgn(cross3(q1, q2, p2));
        int d3 = sgn(cross3(p1, p2, q1)), d4 = sgn(cross3(p1, p2, q2));
        if (d1 * d2 < 0 && d3 * d4 < 0) return true;
        return (d1 == 0 && on_seg(p1, q1, q2)) || (d2 == 0 && on_seg(p2, q1, q2)) ||
               (d3 == 0 && on_seg(q1, p1, p2)) || (d4 == 0 && on_seg(q2, p1, p2));
    };
    auto inside_or_on = [&](Point q, std::span<const Point> poly) {
        if (poly.size() == 1) return q == poly[0];
        if (poly.size() == 2) return on_seg(q, poly[0], poly[1]);
        return strictly_inside_hull(q, poly) || [&] {
            for (std::size_t i = 0; i < poly.size(); ++i)
                if (on_seg(q, poly[i], poly[(i + 1) % poly.size()])) return true;
            return false;
        }();
    };
    for (const Point& p : a)
        if (inside_or_on(p, b)) return true;
    for (const Point& p : b)
        if (inside_or_on(p, a)) return true;
    const std::size_t na = a.size() >= 3 ? a.size() : (a.size() == 2 ? 1 : 0);
    const std::size_t nb = b.size() >= 3 ? b.size() : (b.size() == 2 ? 1 : 0);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            if (seg_hit(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()])) return true;
    return false;
}

} // namespace oracle_ref
