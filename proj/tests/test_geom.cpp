#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracle_ref.hpp"
#include "pentahole/geom.hpp"
#include "pentahole/io.hpp"

using namespace pentahole;

namespace {

PointSet ps(std::vector<Point> v) { return validate_general_position(v); }

std::vector<Point> sample_subset(const PointSet& s, std::mt19937_64& rng, std::size_t k) {
    std::vector<Point> v = s.points();
    for (std::size_t i = 0; i < k; ++i)
        std::swap(v[i], v[i + rng() % (v.size() - i)]);
    v.resize(k);
    return v;
}

} // namespace

TEST_CASE("orientation basic signs") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orient::CCW);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Orient::Collinear);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orient::CW);
}

TEST_CASE("orientation symmetry identities at coordinate extremes") {
    std::mt19937_64 rng(42);
    auto coord = [&] {
        // Bias toward the extremes to stress the overflow guard.
        switch (rng() % 4) {
            case 0: return kCoordMax - static_cast<std::int64_t>(rng() % 3);
            case 1: return -kCoordMax + static_cast<std::int64_t>(rng() % 3);
            default: return static_cast<std::int64_t>(rng() % (2 * kCoordMax + 1)) - kCoordMax;
        }
    };
    for (int t = 0; t < 20000; ++t) {
        Point p{coord(), coord()}, q{coord(), coord()}, r{coord(), coord()};
        const Orient o = orientation(p, q, r);
        CHECK(orientation(q, r, p) == o);
        CHECK(orientation(r, p, q) == o);
        CHECK(static_cast<int>(orientation(p, r, q)) == -static_cast<int>(o));
        CHECK(static_cast<int>(orientation(q, p, r)) == -static_cast<int>(o));
    }
}

TEST_CASE("validate_general_position accepts and canonicalizes") {
    const PointSet s = ps({{5, 0}, {0, 0}, {0, 5}});
    CHECK(s.size() == 3);
    CHECK(s[0] == Point{0, 0});
    CHECK(s[1] == Point{0, 5});
    CHECK(s[2] == Point{5, 0});
}

TEST_CASE("validate_general_position rejects bad input with indices") {
    CHECK_THROWS_WITH_AS(
        (void)validate_general_position({{0, 0}, {1, 1}, {2, 2}, {0, 3}}),
        doctest::Contains("CollinearTriple"), Error);
    try {
        (void)validate_general_position({{0, 0}, {1, 1}, {2, 2}, {0, 3}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CollinearTriple);
        CHECK(e.args() == std::vector<long long>{0, 1, 2});
    }
    try {
        (void)validate_general_position({{0, 0}, {0, 0}, {1, 2}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DuplicatePoint);
        CHECK(e.args() == std::vector<long long>{0, 1});
    }
    try {
        (void)validate_general_position({{0, 0}, {2, 1}, {kCoordMax + 1, 3}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CoordinateOverflow);
        CHECK(e.args() == std::vector<long long>{2});
    }
    CHECK_THROWS_AS((void)validate_general_position({}), Error);
}

TEST_CASE("convex_hull canonical output") {
    // interior point chosen off the diagonals to keep general position
    const PointSet square = ps({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}});
    const ConvexPolygon h = convex_hull(square);
    CHECK(h.vertices() == std::vector<Point>{{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK(point_in_convex_polygon({2, 1}, h) == PointLocation::StrictInside);

    const PointSet five = ps({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}});
    CHECK(convex_hull(five).size() == 5);

    const PointSet tri = ps({{0, 0}, {5, 0}, {0, 5}});
    CHECK(convex_hull(tri).vertices() == std::vector<Point>{{0, 0}, {5, 0}, {0, 5}});

    CHECK_THROWS_AS((void)convex_hull(ps({{0, 0}, {1, 7}})), Error);
}

TEST_CASE("convex_hull is permutation invariant and covers every point") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const PointSet s = random_general_position(12, 1000 + t, 100);
        const ConvexPolygon h = convex_hull(s);
        std::vector<Point> shuffled = s.points();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const ConvexPolygon h2 = ConvexPolygon::hull_of(shuffled);
        CHECK(h.vertices() == h2.vertices());
        for (const Point& p : s.points()) {
            const bool vertex =
                std::find(h.vertices().begin(), h.vertices().end(), p) != h.vertices().end();
            const PointLocation loc = point_in_convex_polygon(p, h);
            CHECK((vertex ? loc == PointLocation::OnBoundary
                          : loc == PointLocation::StrictInside));
        }
    }
}

TEST_CASE("point_in_convex_polygon classification") {
    const ConvexPolygon sq = ConvexPolygon::from_cycle({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK(point_in_convex_polygon({2, 2}, sq) == PointLocation::StrictInside);
    CHECK(point_in_convex_polygon({0, 2}, sq) == PointLocation::OnBoundary);
    CHECK(point_in_convex_polygon({9, 9}, sq) == PointLocation::Outside);
}

TEST_CASE("ConvexPolygon::from_cycle rejects bad cycles") {
    CHECK_THROWS_AS((void)ConvexPolygon::from_cycle({{0, 0}, {4, 0}, {2, 1}, {0, 4}}),
                    Error); // (2,1) not extreme
    CHECK_THROWS_AS((void)ConvexPolygon::from_cycle({{0, 0}, {4, 4}, {4, 0}, {0, 4}}),
                    Error); // scrambled order
    // Reversed direction is accepted and canonicalized.
    const ConvexPolygon p = ConvexPolygon::from_cycle({{0, 4}, {4, 4}, {4, 0}, {0, 0}});
    CHECK(p.vertices() == std::vector<Point>{{0, 0}, {4, 0}, {4, 4}, {0, 4}});
}

TEST_CASE("convex_layers signatures") {
    const PointSet nested =
        ps({{0, 0}, {12, 0}, {0, 12}, {2, 1}, {7, 2}, {2, 7}, {4, 4}, {3, 4}, {3, 2}});
    const ConvexLayers l = convex_layers(nested);
    CHECK(l.signature == LayerSignature{{3, 3, 3}});
    CHECK(l.signature.to_string() == "L{3,3,3}");

    const PointSet nine = ps({{10, 0}, {7, 7}, {0, 10}, {-7, 7}, {-10, 0}, {-7, -7}, {0, -10}, {7, -7}, {9, -4}});
    CHECK(convex_layers(nine).signature == LayerSignature{{9}});

    const PointSet sqc = ps({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}});
    CHECK(convex_layers(sqc).signature == LayerSignature{{4, 1}});
}

TEST_CASE("convex_layers: peeling the first layer shifts the rest") {
    for (int t = 0; t < 30; ++t) {
        const PointSet s = random_general_position(15, 2000 + t, 50);
        const ConvexLayers all = convex_layers(s);
        std::vector<Point> hull = hull_cycle(s.points());
        std::sort(hull.begin(), hull.end());
        std::vector<Point> rest;
        for (const Point& p : s.points())
            if (!std::binary_search(hull.begin(), hull.end(), p)) rest.push_back(p);
        if (rest.empty()) continue;
        const ConvexLayers inner = convex_layers(PointSet::unchecked(rest));
        REQUIRE(inner.layers.size() + 1 == all.layers.size());
        for (std::size_t i = 0; i < inner.layers.size(); ++i)
            CHECK(inner.layers[i] == all.layers[i + 1]);
    }
}

TEST_CASE("convex_polygons_disjoint examples") {
    const ConvexPolygon t1 = ConvexPolygon::from_cycle({{0, 0}, {2, 0}, {0, 2}});
    const ConvexPolygon t2 = ConvexPolygon::from_cycle({{10, 0}, {12, 0}, {10, 2}});
    CHECK(convex_polygons_disjoint(t1, t2));
    CHECK(convex_polygons_disjoint(t2, t1));

    const ConvexPolygon sq = ConvexPolygon::from_cycle({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    const ConvexPolygon inner = ConvexPolygon::from_cycle({{1, 1}, {3, 1}, {1, 3}});
    CHECK_FALSE(convex_polygons_disjoint(sq, inner));
    CHECK_FALSE(convex_polygons_disjoint(inner, sq));

    const ConvexPolygon shares = ConvexPolygon::from_cycle({{0, 0}, {-3, -1}, {-1, -3}});
    CHECK_FALSE(convex_polygons_disjoint(t1, shares)); // one common vertex
}

TEST_CASE("region disjointness agrees with the segment-intersection oracle") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        const PointSet s = random_general_position(14, 5000 + t, 30);
        const std::size_t ka = 1 + rng() % 6, kb = 1 + rng() % 6;
        std::vector<Point> a = sample_subset(s, rng, ka);
        std::vector<Point> b = sample_subset(s, rng, kb);
        const std::vector<Point> ha = hull_cycle(a), hb = hull_cycle(b);
        const bool dis = convex_regions_disjoint(ha, hb);
        CHECK(dis == convex_regions_disjoint(hb, ha));
        CHECK(dis == !oracle_ref::regions_intersect_ref(ha, hb));
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("halfplane_points") {
    const PointSet s = ps({{1, 1}, {1, -1}, {5, 0}});
    const PointSet open = halfplane_points({0, 0}, {10, 0}, {0, 1}, false, s);
    CHECK(open.points() == std::vector<Point>{{1, 1}});
    const PointSet closed = halfplane_points({0, 0}, {10, 0}, {0, 1}, true, s);
    CHECK(closed.points() == std::vector<Point>{{1, 1}, {5, 0}});
    CHECK_THROWS_AS((void)halfplane_points({0, 0}, {10, 0}, {5, 0}, false, s), Error);
}

TEST_CASE("kth_angular_neighbor in a halfplane") {
    const PointSet s = ps({{5, 1}, {4, 3}, {1, 5}});
    const Region upper = Halfplane{{0, 0}, {10, 0}, {0, 1}, false};
    CHECK(kth_angular_neighbor({0, 0}, {10, 0}, upper, 1, s) == Point{5, 1});
    CHECK(kth_angular_neighbor({0, 0}, {10, 0}, upper, 3, s) == Point{1, 5});
    CHECK_THROWS_AS((void)kth_angular_neighbor({0, 0}, {10, 0}, upper, 4, s), Error);
}

TEST_CASE("kth_angular_neighbor enumerates each region point once") {
    for (int t = 0; t < 30; ++t) {
        const PointSet s = random_general_position(12, 3000 + t, 60);
        const Point apex = s[0];
        const Point target = s[1];
        const int ws = orient_sign(apex, target, s[2]) >= 0 ? 1 : -1;
        const Point witness{apex.x + (target.y - apex.y) * -ws, apex.y + (target.x - apex.x) * ws};
        const Region r = Halfplane{apex, target, witness, false};
        std::vector<Point> expected;
        for (const Point& p : s.points())
            if (!(p == apex) && !(p == target) && region_contains(r, p)) expected.push_back(p);
        std::vector<Point> seen;
        for (std::size_t k = 1; k <= expected.size(); ++k)
            seen.push_back(kth_angular_neighbor(apex, target, r, static_cast<int>(k), s));
        std::sort(seen.begin(), seen.end());
        std::sort(expected.begin(), expected.end());
        CHECK(seen == expected);
    }
}

TEST_CASE("cone membership is two orientation tests") {
    const Region cone = Cone{{0, 0}, {10, 0}, {0, 10}};
    CHECK(region_contains(cone, {3, 2}));
    CHECK_FALSE(region_contains(cone, {5, 0}));  // on a boundary ray
    CHECK_FALSE(region_contains(cone, {-1, 5}));
    CHECK_FALSE(region_contains(cone, {4, -2}));

    const PointSet s = ps({{5, 1}, {4, 3}, {1, 5}, {-3, 2}, {6, -2}});
    CHECK(kth_angular_neighbor({0, 0}, {10, 0}, cone, 1, s) == Point{5, 1});
    CHECK(kth_angular_neighbor({0, 0}, {10, 0}, cone, 3, s) == Point{1, 5});
    CHECK_THROWS_AS((void)kth_angular_neighbor({0, 0}, {10, 0}, cone, 4, s), Error);
}

TEST_CASE("segment predicates") {
    CHECK(point_on_segment({2, 2}, {0, 0}, {4, 4}));
    CHECK_FALSE(point_on_segment({5, 5}, {0, 0}, {4, 4}));
    CHECK(segments_intersect_closed({0, 0}, {4, 4}, {0, 4}, {4, 0}));
    CHECK(segments_intersect_closed({0, 0}, {4, 0}, {4, 0}, {6, 3})); // endpoint touch
    CHECK_FALSE(segments_intersect_closed({0, 0}, {4, 0}, {0, 1}, {4, 1}));
}

TEST_CASE("PointSet digest and lookup") {
    const PointSet a = ps({{0, 0}, {4, 0}, {1, 3}});
    const PointSet b = ps({{4, 0}, {1, 3}, {0, 0}});
    CHECK(a.digest() == b.digest());
    CHECK(a.digest_hex().size() == 16);
    CHECK(a.contains({4, 0}));
    CHECK_FALSE(a.contains({2, 2}));
    CHECK(a.index_of({1, 3}) == 1);
    CHECK(a.index_of({9, 9}) == -1);
}
