// Exhaustive k-hole enumeration: the oracle every constructive finder is
// validated against. A serial reference implementation is kept alongside the
// OpenMP kernel; both produce identical, canonically ordered results.

#include <algorithm>
#include <cstdlib>

#include "holes_internal.hpp"
#include "pentahole/holes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pentahole {

namespace detail {

int small_hull(const Point* pts, int n, Point* out) {
    Point p[16];
    std::copy(pts, pts + n, p);
    std::sort(p, p + n);
    if (n <= 2) {
        std::copy(p, p + n, out);
        return n;
    }
    int h = 0;
    for (int i = 0; i < n; ++i) {
        while (h >= 2 && cross(out[h - 2], out[h - 1], p[i]) <= 0) --h;
        out[h++] = p[i];
    }
    const int lower = h + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (h >= lower && cross(out[h - 2], out[h - 1], p[i]) <= 0) --h;
        out[h++] = p[i];
    }
    return h - 1;
}

bool five_is_hole_in(const Point* five, const std::vector<Point>& host_pts) {
    Point cyc[12];
    if (small_hull(five, 5, cyc) != 5) return false;
    for (const Point& q : host_pts) {
        bool vertex = false;
        for (int i = 0; i < 5; ++i)
            if (q == five[i]) {
                vertex = true;
                break;
            }
        if (vertex) continue;
        bool inside = true;
        for (int i = 0; i < 5 && inside; ++i)
            if (cross(cyc[i], cyc[(i + 1) % 5], q) <= 0) inside = false;
        if (inside) return false;
    }
    return true;
}

std::optional<std::vector<Point>> sweep_5subsets(std::vector<Point> cfg) {
    std::sort(cfg.begin(), cfg.end());
    const int n = static_cast<int>(cfg.size());
    if (n < 5) return std::nullopt;
    Point five[5];
    for (int a = 0; a < n - 4; ++a)
        for (int b = a + 1; b < n - 3; ++b)
            for (int c = b + 1; c < n - 2; ++c)
                for (int d = c + 1; d < n - 1; ++d)
                    for (int e = d + 1; e < n; ++e) {
                        five[0] = cfg[a];
                        five[1] = cfg[b];
                        five[2] = cfg[c];
                        five[3] = cfg[d];
                        five[4] = cfg[e];
                        if (five_is_hole_in(five, cfg))
                            return std::vector<Point>(five, five + 5);
                    }
    return std::nullopt;
}

Hole make_verified_hole(const std::vector<Point>& five, const PointSet& host) {
    if (five.size() != 5 || !is_empty_convex(five, host))
        throw ContractViolation("constructed pentagon is not a 5-hole of its host");
    return Hole{ConvexPolygon::hull_of(five), host.digest()};
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (n - k + i) / i;
    }
    return std::min(r, cap + 1);
}

} // namespace detail

bool is_empty_convex(std::span<const Point> subset, const PointSet& s) {
    if (subset.size() < 3)
        fail(Errc::PreconditionViolated, "subset needs at least 3 points");
    for (const Point& p : subset)
        if (!s.contains(p))
            fail(Errc::SubsetNotInHost, "subset point (" + std::to_string(p.x) + ", " +
                                            std::to_string(p.y) + ") not in host set");
    const std::vector<Point> cyc = hull_cycle(std::vector<Point>(subset.begin(), subset.end()));
    if (cyc.size() != subset.size()) return false; // not in convex position
    for (const Point& q : s.points()) {
        if (std::find(subset.begin(), subset.end(), q) != subset.end()) continue;
        if (locate_in_hull(q, cyc) == PointLocation::StrictInside) return false;
    }
    return true;
}

std::uint64_t default_oracle_budget() {
    if (const char* env = std::getenv("PENTAHOLE_ORACLE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100'000'000ull;
}

namespace {

using detail::small_hull;

// All k-subsets of pts whose first index is i0, tested for hole-ness.
void scan_prefix(const std::vector<Point>& pts, int k, int i0,
                 std::vector<std::vector<Point>>& out) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(static_cast<std::size_t>(k));
    idx[0] = i0;
    for (int j = 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = i0 + j;
    Point sub[16];
    Point cyc[32]; // the chain holds up to 2n-1 entries transiently
    for (;;) {
        for (int j = 0; j < k; ++j) sub[j] = pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        if (small_hull(sub, k, cyc) == k) {
            bool empty = true;
            for (int q = 0; q < n && empty; ++q) {
                bool in_subset = false;
                for (int j = 0; j < k; ++j)
                    if (idx[static_cast<std::size_t>(j)] == q) {
                        in_subset = true;
                        break;
                    }
                if (in_subset) continue;
                bool inside = true;
                const Point& t = pts[static_cast<std::size_t>(q)];
                for (int e = 0; e < k && inside; ++e)
                    if (cross(cyc[e], cyc[(e + 1) % k], t) <= 0) inside = false;
                if (inside) empty = false;
            }
            if (empty) out.emplace_back(sub, sub + k);
        }
        // next combination with fixed idx[0]
        int j = k - 1;
        while (j >= 1 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
        if (j < 1) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < k; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

std::vector<Hole> run_enumeration(const PointSet& s, int k, const OracleOptions& opt,
                                  bool parallel) {
    const int n = static_cast<int>(s.size());
    if (k < 3 || k > n)
        fail(Errc::PreconditionViolated, "k must satisfy 3 <= k <= n");
    if (k > 15) fail(Errc::PreconditionViolated, "k too large for the enumeration oracle");
    const std::uint64_t budget = opt.budget ? opt.budget : default_oracle_budget();
    const std::uint64_t total =
        detail::binomial_capped(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), budget);
    if (total > budget)
        fail(Errc::BudgetExceeded, "C(n,k) exceeds the oracle budget of " + std::to_string(budget));

    const std::vector<Point>& pts = s.points();
    const int prefixes = n - k + 1;
    std::vector<std::vector<std::vector<Point>>> found(static_cast<std::size_t>(prefixes));

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int i0 = 0; i0 < prefixes; ++i0)
            scan_prefix(pts, k, i0, found[static_cast<std::size_t>(i0)]);
    } else
#endif
    {
        (void)parallel;
        for (int i0 = 0; i0 < prefixes; ++i0)
            scan_prefix(pts, k, i0, found[static_cast<std::size_t>(i0)]);
    }

    std::vector<Hole> holes;
    for (const auto& bucket : found)
        for (const std::vector<Point>& five : bucket)
            holes.push_back(Hole{ConvexPolygon::hull_of(five), s.digest()});
    std::sort(holes.begin(), holes.end());
    return holes;
}

} // namespace

std::vector<Hole> enumerate_k_holes_serial(const PointSet& s, int k, const OracleOptions& opt) {
    return run_enumeration(s, k, opt, false);
}

std::vector<Hole> enumerate_k_holes_parallel(const PointSet& s, int k, const OracleOptions& opt) {
    return run_enumeration(s, k, opt, true);
}

std::vector<Hole> enumerate_k_holes(const PointSet& s, int k, const OracleOptions& opt) {
    return run_enumeration(s, k, opt, opt.parallel);
}

} // namespace pentahole
