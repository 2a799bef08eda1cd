// Constructive 5-hole extraction. Hull-size cases reduce along the same
// region-counting and shrinking arguments the enumeration oracle certifies;
// every returned hole is re-verified against its host before leaving.

#include <algorithm>
#include <cstdio>

#include "holes_internal.hpp"
#include "pentahole/holes.hpp"

namespace pentahole {

namespace detail {

namespace {

std::vector<Point> interior_points(const std::vector<Point>& cfg, const std::vector<Point>& hull) {
    std::vector<Point> on(hull.begin(), hull.end());
    std::sort(on.begin(), on.end());
    std::vector<Point> out;
    out.reserve(cfg.size() - hull.size());
    for (const Point& p : cfg)
        if (!std::binary_search(on.begin(), on.end(), p)) out.push_back(p);
    return out;
}

// The contiguous cyclic run of hull vertices satisfying pred, in cycle order.
template <class Pred>
std::vector<Point> cyclic_run(const std::vector<Point>& cyc, Pred pred) {
    const std::size_t n = cyc.size();
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(cyc[i]) && !pred(cyc[(i + n - 1) % n])) {
            start = i;
            break;
        }
    std::vector<Point> run;
    if (start == n) {
        if (!cyc.empty() && pred(cyc[0])) run = cyc; // all match
        return run;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = cyc[(start + i) % n];
        if (!pred(p)) break;
        run.push_back(p);
    }
    return run;
}

bool cyclic_convex(std::span<const Point> cyc) {
    const std::size_t n = cyc.size();
    for (std::size_t i = 0; i < n; ++i)
        if (orient_sign(cyc[i], cyc[(i + 1) % n], cyc[(i + 2) % n]) <= 0) return false;
    return true;
}

// Least |distance| to the line ab among candidates, lexicographic tie-break.
Point nearest_to_line(Point a, Point b, const std::vector<Point>& cands) {
    Point best = cands.front();
    std::int64_t best_d = std::abs(cross(a, b, best));
    for (const Point& q : cands) {
        const std::int64_t d = std::abs(cross(a, b, q));
        if (d < best_d || (d == best_d && q < best)) {
            best = q;
            best_d = d;
        }
    }
    return best;
}

std::vector<Point> points_strictly_inside(const std::vector<Point>& cfg,
                                          const std::vector<Point>& cyc) {
    std::vector<Point> out;
    for (const Point& p : cfg) {
        if (std::find(cyc.begin(), cyc.end(), p) != cyc.end()) continue;
        if (locate_in_hull(p, cyc) == PointLocation::StrictInside) out.push_back(p);
    }
    return out;
}

// Hull pentagon with a single interior point: a 5-hole exists iff the point
// sits in one of the five ear triangles, in which case swapping it for the
// ear apex gives the hole.
std::optional<std::vector<Point>> pentagon_one_interior(const std::vector<Point>& hull, Point p) {
    for (int i = 0; i < 5; ++i) {
        const Point a = hull[static_cast<std::size_t>((i + 4) % 5)];
        const Point b = hull[static_cast<std::size_t>((i + 1) % 5)];
        const Point v = hull[static_cast<std::size_t>(i)];
        if (orient_sign(a, b, p) == orient_sign(a, b, v)) {
            std::vector<Point> five;
            for (int j = 0; j < 5; ++j)
                if (j != i) five.push_back(hull[static_cast<std::size_t>(j)]);
            five.push_back(p);
            return five;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<Point> find5_hull6(std::vector<Point> cfg) {
    std::sort(cfg.begin(), cfg.end());
    for (;;) {
        const std::vector<Point> hull = hull_cycle(cfg);
        const std::size_t h = hull.size();
        if (h < 6) throw ContractViolation("hexagon path entered with hull < 6");
        const std::vector<Point> inter = interior_points(cfg, hull);
        const std::size_t ni = inter.size();

        if (ni == 0) return {hull[0], hull[1], hull[2], hull[3], hull[4]};

        if (ni == 1) {
            if (h > 6) {
                // peel a hull vertex until the hexagon base case applies
                const Point drop = *std::max_element(hull.begin(), hull.end());
                cfg.erase(std::find(cfg.begin(), cfg.end(), drop));
                continue;
            }
            // hexagon + one interior point: the long diagonal through
            // hull[0] and hull[3] leaves p strictly on one side; the four
            // vertices of the other side extend it to an empty pentagon.
            const Point p = inter[0];
            if (orient_sign(hull[0], hull[3], p) < 0)
                return {hull[3], hull[4], hull[5], hull[0], p};
            return {hull[0], hull[1], hull[2], hull[3], p};
        }

        // Split off an edge of the interior hull.
        const std::vector<Point> ih = hull_cycle(inter);
        const Point x = ih[0], y = ih[1];
        int zsgn;
        if (ni == 2) {
            int left = 0;
            for (const Point& v : hull)
                if (orient_sign(x, y, v) > 0) ++left;
            zsgn = left >= 3 ? -1 : +1; // rich side = -zsgn
        } else {
            Point z{};
            for (const Point& q : inter)
                if (!(q == x) && !(q == y)) {
                    z = q;
                    break;
                }
            zsgn = orient_sign(x, y, z);
        }
        auto beyond = [&](const Point& v) { return orient_sign(x, y, v) == -zsgn; };
        const std::vector<Point> run = cyclic_run(hull, beyond);
        if (run.size() >= 3) return {x, y, run[0], run[1], run[2]};
        if (ni == 2 || run.empty())
            throw ContractViolation("hexagon split lost its guaranteed far side");
        // keep the closed interior side; x and y surface onto the hull
        std::vector<Point> next;
        next.reserve(cfg.size() - run.size());
        for (const Point& p : cfg)
            if (!beyond(p)) next.push_back(p);
        cfg = std::move(next);
    }
}

std::vector<Point> find5_hull5(std::vector<Point> cfg) {
    std::sort(cfg.begin(), cfg.end());
    for (;;) {
        const std::vector<Point> hull = hull_cycle(cfg);
        if (hull.size() != 5) throw ContractViolation("pentagon path entered with hull != 5");
        const std::vector<Point> inter = interior_points(cfg, hull);
        const std::size_t ni = inter.size();
        if (ni < 2) throw ContractViolation("pentagon path needs >= 2 interior points");

        if (ni == 2) {
            const Point x = inter[0], y = inter[1];
            int left = 0;
            for (const Point& v : hull)
                if (orient_sign(x, y, v) > 0) ++left;
            const int rich = left >= 3 ? +1 : -1;
            const std::vector<Point> run =
                cyclic_run(hull, [&](const Point& v) { return orient_sign(x, y, v) == rich; });
            if (run.size() < 3)
                throw ContractViolation("two-interior case lost its 3-vertex side");
            return {x, y, run[0], run[1], run[2]};
        }

        if (ni == 3) {
            const std::vector<Point> tri = hull_cycle(inter);
            // an interior edge line with three hull vertices strictly beyond
            for (int e = 0; e < 3; ++e) {
                const Point a = tri[static_cast<std::size_t>(e)];
                const Point b = tri[static_cast<std::size_t>((e + 1) % 3)];
                const Point t = tri[static_cast<std::size_t>((e + 2) % 3)];
                const int ts = orient_sign(a, b, t);
                const std::vector<Point> run = cyclic_run(
                    hull, [&](const Point& v) { return orient_sign(a, b, v) == -ts; });
                if (run.size() >= 3) return {a, b, run[0], run[1], run[2]};
            }
            // an edge slab with two hull vertices: they close a pentagon
            // around the whole interior triangle
            for (int e = 0; e < 3; ++e) {
                const Point a = tri[static_cast<std::size_t>(e)];
                const Point b = tri[static_cast<std::size_t>((e + 1) % 3)];
                const Point t = tri[static_cast<std::size_t>((e + 2) % 3)];
                const int ts = orient_sign(a, b, t);
                const int sa = orient_sign(t, a, b);
                const int sb = orient_sign(t, b, a);
                const std::vector<Point> run = cyclic_run(hull, [&](const Point& v) {
                    return orient_sign(a, b, v) == -ts && orient_sign(t, a, v) == sa &&
                           orient_sign(t, b, v) == sb;
                });
                for (std::size_t i = 0; i + 1 < run.size(); ++i)
                    for (std::size_t j = i + 1; j < run.size(); ++j) {
                        const Point five[5] = {a, b, t, run[i], run[j]};
                        if (five_is_hole_in(five, cfg))
                            return std::vector<Point>(five, five + 5);
                    }
            }
            if (auto s = sweep_5subsets(cfg)) return *s;
            throw ContractViolation("pentagon-hull case with 3 interior points exhausted");
        }

        // ni >= 4: shrink along an interior hull edge
        const std::vector<Point> ih = hull_cycle(inter);
        const Point x0 = ih[0], y0 = ih[1];
        Point z{};
        for (const Point& q : inter)
            if (!(q == x0) && !(q == y0)) {
                z = q;
                break;
            }
        const int zsgn = orient_sign(x0, y0, z);
        auto beyond = [&](const Point& v) { return orient_sign(x0, y0, v) == -zsgn; };
        const std::vector<Point> run = cyclic_run(hull, beyond);
        if (run.empty()) throw ContractViolation("interior edge with no hull vertex beyond");
        if (run.size() >= 3) return {x0, y0, run[0], run[1], run[2]};
        if (run.size() == 1) {
            std::vector<Point> next;
            for (const Point& p : cfg)
                if (!beyond(p)) next.push_back(p);
            return find5_hull6(std::move(next)); // hull grew to >= 6
        }

        // run.size() == 2: the interior side holds exactly u, v, w; the far
        // side B1, B2 is cut off, shrinking the pentagon to (u, v, w, x, y).
        const std::vector<Point> zrun = cyclic_run(hull, [&](const Point& v) { return !beyond(v); });
        if (zrun.size() != 3) throw ContractViolation("unexpected interior-side arc");
        const Point u = zrun[0], v = zrun[1], w = zrun[2];
        const Point b1 = run[0], b2 = run[1];
        Point x = x0, y = y0;
        {
            const Point pent[5] = {u, v, w, x, y};
            if (!cyclic_convex(pent)) std::swap(x, y);
            const Point pent2[5] = {u, v, w, x, y};
            if (!cyclic_convex(pent2))
                throw ContractViolation("shrunk pentagon is not convex under either labeling");
        }
        // Notch triangles between the cut line and the two crossed hull
        // edges; only these can keep interior points out of the shrunk
        // pentagon. All their bounding lines pass through input points.
        const int suy = orient_sign(u, y, b2);
        const int sub = orient_sign(u, b2, y);
        const int swx = orient_sign(w, x, b1);
        const int swb = orient_sign(w, b1, x);
        std::vector<Point> ry, rx;
        for (const Point& q : inter) {
            if (q == x || q == y) continue;
            if (orient_sign(u, y, q) == suy && orient_sign(u, b2, q) == sub)
                ry.push_back(q);
            else if (orient_sign(w, x, q) == swx && orient_sign(w, b1, q) == swb)
                rx.push_back(q);
        }
        if (!ry.empty()) {
            const Point q = nearest_to_line(u, y, ry);
            const std::vector<Point> hex = {u, v, w, x, y, q};
            if (!cyclic_convex(hex))
                throw ContractViolation("notch point does not extend to a convex hexagon");
            std::vector<Point> sub_cfg = points_strictly_inside(cfg, hex);
            sub_cfg.insert(sub_cfg.end(), hex.begin(), hex.end());
            return find5_hull6(std::move(sub_cfg));
        }
        if (!rx.empty()) {
            const Point q = nearest_to_line(w, x, rx);
            const std::vector<Point> hex = {u, v, w, q, x, y};
            if (!cyclic_convex(hex))
                throw ContractViolation("notch point does not extend to a convex hexagon");
            std::vector<Point> sub_cfg = points_strictly_inside(cfg, hex);
            sub_cfg.insert(sub_cfg.end(), hex.begin(), hex.end());
            return find5_hull6(std::move(sub_cfg));
        }
        // Both notches empty: every remaining interior point lies strictly
        // inside the shrunk pentagon, which loses exactly x and y.
        std::vector<Point> next = {u, v, w, x, y};
        const std::vector<Point> pent = {u, v, w, x, y};
        for (const Point& q : inter) {
            if (q == x || q == y) continue;
            if (locate_in_hull(q, pent) != PointLocation::StrictInside)
                throw ContractViolation("interior point escaped the shrunk pentagon");
            next.push_back(q);
        }
        cfg = std::move(next);
    }
}

namespace {

// Nine points, quad hull, five interior: the terminal case analysis keyed on
// the shape of the second layer.
std::vector<Point> quad_base(const std::vector<Point>& cfg, const std::vector<Point>& hull,
                             const std::vector<Point>& inter) {
    const std::vector<Point> l2 = hull_cycle(inter);
    if (l2.size() == 5) return l2; // second layer is itself an empty pentagon

    if (l2.size() == 4) {
        Point x{};
        for (const Point& p : inter)
            if (std::find(l2.begin(), l2.end(), p) == l2.end()) {
                x = p;
                break;
            }
        // relabel so the third-layer point sits in triangle(z1, z3, z4)
        Point z1, z2, z3, z4;
        if (orient_sign(l2[0], l2[2], x) == orient_sign(l2[0], l2[2], l2[1])) {
            z1 = l2[2], z2 = l2[3], z3 = l2[0], z4 = l2[1];
        } else {
            z1 = l2[0], z2 = l2[1], z3 = l2[2], z4 = l2[3];
        }
        // one outer point closing the quad z1 z2 z3 x
        for (const Point& p : hull) {
            const Point five[5] = {p, z1, z2, z3, x};
            if (five_is_hole_in(five, cfg)) return std::vector<Point>(five, five + 5);
        }
        // two outer points over the z4-side edges
        for (std::size_t i = 0; i < hull.size(); ++i)
            for (std::size_t j = i + 1; j < hull.size(); ++j) {
                const Point c1[5] = {hull[i], hull[j], z1, z4, x};
                if (five_is_hole_in(c1, cfg)) return std::vector<Point>(c1, c1 + 5);
                const Point c2[5] = {hull[i], hull[j], z3, z4, x};
                if (five_is_hole_in(c2, cfg)) return std::vector<Point>(c2, c2 + 5);
            }
        // two outer points spanning a pentagon around x and z2
        for (std::size_t i = 0; i < hull.size(); ++i)
            for (std::size_t j = i + 1; j < hull.size(); ++j) {
                const Point c[5] = {hull[i], hull[j], z1, z3, z4};
                Point cyc[12];
                if (small_hull(c, 5, cyc) != 5) continue;
                std::vector<Point> pent(c, c + 5);
                std::vector<Point> inside = points_strictly_inside(cfg, hull_cycle(pent));
                if (inside.size() >= 2) {
                    inside.insert(inside.end(), pent.begin(), pent.end());
                    return find5_hull5(std::move(inside));
                }
            }
        if (auto s = sweep_5subsets(cfg)) return *s;
        throw ContractViolation("quad-hull case with 4-point second layer exhausted");
    }

    // second layer is a triangle, third layer a pair
    std::vector<Point> l3;
    for (const Point& p : inter)
        if (std::find(l2.begin(), l2.end(), p) == l2.end()) l3.push_back(p);
    const Point x = l3[0], y = l3[1];
    int pos = 0;
    for (const Point& q : l2)
        if (orient_sign(x, y, q) > 0) ++pos;
    if (pos == 3 || pos == 0) {
        const Point five[5] = {x, y, l2[0], l2[1], l2[2]};
        if (five_is_hole_in(five, cfg)) return std::vector<Point>(five, five + 5);
    }
    for (const Point& p : hull)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                const Point five[5] = {p, l2[i], l2[j], x, y};
                if (five_is_hole_in(five, cfg)) return std::vector<Point>(five, five + 5);
            }
    for (std::size_t a = 0; a < hull.size(); ++a)
        for (std::size_t b = a + 1; b < hull.size(); ++b)
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j)
                    for (const Point t : {x, y}) {
                        const Point five[5] = {hull[a], hull[b], l2[i], l2[j], t};
                        if (five_is_hole_in(five, cfg)) return std::vector<Point>(five, five + 5);
                    }
    if (auto s = sweep_5subsets(cfg)) return *s;
    throw ContractViolation("quad-hull case with 3-point second layer exhausted");
}

} // namespace

std::vector<Point> find5_hull4(std::vector<Point> cfg) {
    std::sort(cfg.begin(), cfg.end());
    for (;;) {
        const std::vector<Point> hull = hull_cycle(cfg);
        if (hull.size() != 4) throw ContractViolation("quad path entered with hull != 4");
        const std::vector<Point> inter = interior_points(cfg, hull);
        if (inter.size() < 5) throw ContractViolation("quad path needs >= 5 interior points");
        if (inter.size() == 5) return quad_base(cfg, hull, inter);

        // drop the hull vertex whose diagonal-side triangle is occupied;
        // that keeps the hull at size >= 4
        const int s1 = orient_sign(hull[0], hull[2], hull[1]);
        bool p1_side = false;
        for (const Point& q : inter)
            if (orient_sign(hull[0], hull[2], q) == s1) {
                p1_side = true;
                break;
            }
        const Point drop = p1_side ? hull[1] : hull[3];
        cfg.erase(std::find(cfg.begin(), cfg.end(), drop));
        const std::size_t nh = hull_cycle(cfg).size();
        if (nh >= 6) return find5_hull6(std::move(cfg));
        if (nh == 5) return find5_hull5(std::move(cfg));
    }
}

std::optional<std::vector<Point>> find5_in_config(std::vector<Point> cfg) {
    if (cfg.size() < 5) return std::nullopt;
    std::sort(cfg.begin(), cfg.end());
    const std::vector<Point> hull = hull_cycle(cfg);
    const std::size_t h = hull.size();
    const std::size_t ni = cfg.size() - h;
    if (h >= 6) return find5_hull6(std::move(cfg));
    if (h == 5) {
        if (ni == 0) return hull;
        if (ni == 1) return pentagon_one_interior(hull, interior_points(cfg, hull)[0]);
        return find5_hull5(std::move(cfg));
    }
    if (h == 4 && ni >= 5) return find5_hull4(std::move(cfg));
    return sweep_5subsets(std::move(cfg));
}

std::int64_t generic_direction(const std::vector<Point>& pts) {
    for (std::int64_t d = 0;; ++d) {
        std::vector<std::int64_t> proj;
        proj.reserve(pts.size());
        for (const Point& p : pts) proj.push_back(p.x + d * p.y);
        std::sort(proj.begin(), proj.end());
        if (std::adjacent_find(proj.begin(), proj.end()) == proj.end()) return d;
    }
}

std::vector<Point> projection_order(const std::vector<Point>& pts, std::int64_t d) {
    std::vector<Point> out = pts;
    std::sort(out.begin(), out.end(), [d](const Point& a, const Point& b) {
        return a.x + d * a.y < b.x + d * b.y;
    });
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Public finders

using namespace detail;

Hole find_5hole_hexagon(const PointSet& s) {
    const std::vector<Point>& pts = s.points();
    const std::vector<Point> hull = hull_cycle(pts);
    if (hull.size() >= 6) return make_verified_hole(find5_hull6(pts), s);

    // Locate six points in convex position: any convex layer of size >= 6
    // supplies them, otherwise a bounded lexicographic subset search.
    std::vector<Point> hexagon;
    if (s.size() >= 6) {
        const ConvexLayers lay = convex_layers(s);
        for (const auto& layer : lay.layers)
            if (layer.size() >= 6) {
                hexagon.assign(layer.begin(), layer.begin() + 6);
                break;
            }
    }
    if (hexagon.empty() && s.size() >= 6) {
        const int n = static_cast<int>(pts.size());
        const std::uint64_t budget = default_oracle_budget();
        if (binomial_capped(static_cast<std::uint64_t>(n), 6, budget) > budget)
            fail(Errc::BudgetExceeded, "hexagon location would exceed the oracle budget");
        int idx[6] = {0, 1, 2, 3, 4, 5};
        Point sub[6], cyc[12];
        for (;;) {
            for (int j = 0; j < 6; ++j) sub[j] = pts[static_cast<std::size_t>(idx[j])];
            if (small_hull(sub, 6, cyc) == 6) {
                hexagon.assign(cyc, cyc + 6);
                break;
            }
            int j = 5;
            while (j >= 0 && idx[j] == n - 6 + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int t = j + 1; t < 6; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    if (hexagon.empty())
        fail(Errc::NoConvexHexagonFound, "set contains no 6 points in convex position");

    std::vector<Point> cfg = points_strictly_inside(pts, hull_cycle(hexagon));
    cfg.insert(cfg.end(), hexagon.begin(), hexagon.end());
    return make_verified_hole(find5_hull6(std::move(cfg)), s);
}

Hole find_5hole_pentagon_hull(const PointSet& z) {
    const std::vector<Point> hull = hull_cycle(z.points());
    if (hull.size() != 5 || z.size() < 7)
        fail(Errc::PreconditionViolated, "need hull size 5 with at least 2 interior points");
    return make_verified_hole(find5_hull5(z.points()), z);
}

Hole find_5hole_quad_hull(const PointSet& z) {
    const std::vector<Point> hull = hull_cycle(z.points());
    if (hull.size() != 4 || z.size() < 9)
        fail(Errc::PreconditionViolated, "need hull size 4 with at least 5 interior points");
    return make_verified_hole(find5_hull4(z.points()), z);
}

Hole find_5hole_9pts_hull4plus(const PointSet& z) {
    if (z.size() != 9) fail(Errc::PreconditionViolated, "need exactly 9 points");
    const std::vector<Point> hull = hull_cycle(z.points());
    if (hull.size() >= 6) return make_verified_hole(find5_hull6(z.points()), z);
    if (hull.size() == 5) return make_verified_hole(find5_hull5(z.points()), z);
    if (hull.size() == 4) return make_verified_hole(find5_hull4(z.points()), z);
    fail(Errc::PreconditionViolated, "hull size must be at least 4");
}

bool is_k_redundant(Point p, const PointSet& t, int k) {
    if (k < 3) fail(Errc::PreconditionViolated, "k must be at least 3");
    if (!t.contains(p)) fail(Errc::PointNotInSet, "point is not a member of the subset");
    std::vector<Point> rest;
    rest.reserve(t.size() - 1);
    for (const Point& q : t.points())
        if (!(q == p)) rest.push_back(q);
    if (rest.size() < static_cast<std::size_t>(k)) return false;
    if (k == 5) return find_5hole(PointSet::unchecked(std::move(rest))).has_value();
    return !enumerate_k_holes(PointSet::unchecked(std::move(rest)), k).empty();
}

namespace {

// Structured search; sets `decided` when the outcome is final (hole found,
// or absence proven for the fully decided small cases).
std::optional<Hole> find_5hole_structured(const PointSet& s, bool& decided) {
    decided = false;
    const std::vector<Point>& pts = s.points();
    const std::vector<Point> hull = hull_cycle(pts);
    const std::size_t h = hull.size();
    const std::size_t ni = pts.size() - h;

    if (h >= 6) {
        decided = true;
        return make_verified_hole(find5_hull6(pts), s);
    }
    if (h == 5) {
        decided = true;
        if (ni == 0) return make_verified_hole(hull, s);
        if (ni == 1) {
            const auto five = pentagon_one_interior(hull, interior_points(pts, hull)[0]);
            if (five) return make_verified_hole(*five, s);
            return std::nullopt; // the six-point configuration provably has no 5-hole
        }
        return make_verified_hole(find5_hull5(pts), s);
    }
    if (h == 4 && ni >= 5) {
        decided = true;
        return make_verified_hole(find5_hull4(pts), s);
    }
    if (pts.size() <= 9) {
        decided = true;
        if (auto five = sweep_5subsets(pts)) return make_verified_hole(*five, s);
        return std::nullopt;
    }

    // Hull of size 3 with 10+ points: classify slab windows of nine; a hole
    // inside a window is empty in all of S since the slab captures every
    // host point between its projection bounds.
    const std::int64_t d = generic_direction(pts);
    const std::vector<Point> order = projection_order(pts, d);
    for (std::size_t wstart = 0; wstart + 9 <= order.size(); ++wstart) {
        std::vector<Point> window(order.begin() + static_cast<std::ptrdiff_t>(wstart),
                                  order.begin() + static_cast<std::ptrdiff_t>(wstart) + 9);
        if (auto five = find5_in_config(std::move(window))) {
            decided = true;
            return make_verified_hole(*five, s);
        }
    }
    return std::nullopt; // undecided: caller falls back to the oracle
}

} // namespace

std::optional<Hole> find_5hole(const PointSet& s) {
    if (s.size() < 5) fail(Errc::PreconditionViolated, "need at least 5 points");
    bool decided = false;
    try {
        std::optional<Hole> res = find_5hole_structured(s, decided);
        if (decided) return res;
    } catch (const ContractViolation& cv) {
        std::fprintf(stderr, "pentahole: structured 5-hole search failed (%s); using the oracle\n",
                     cv.what());
    }
    const std::vector<Hole> all = enumerate_k_holes(s, 5);
    if (!all.empty()) return all.front();
    if (s.size() >= 10)
        throw ContractViolation("a valid set of 10+ points must contain a 5-hole");
    return std::nullopt;
}

NinePointClassification classify_9points(const PointSet& z) {
    if (z.size() != 9) fail(Errc::PreconditionViolated, "need exactly 9 points");
    NinePointClassification out{std::nullopt, convex_layers(z).signature};
    if (auto five = find5_in_config(z.points())) {
        out.hole = make_verified_hole(*five, z);
        return out;
    }
    if (!(out.signature == LayerSignature{{3, 3, 3}} ||
          out.signature == LayerSignature{{3, 5, 1}}))
        throw ContractViolation("hole-free 9-point set outside L{3,3,3} and L{3,5,1}");
    return out;
}

} // namespace pentahole
