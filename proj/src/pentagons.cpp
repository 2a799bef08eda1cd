// Disjoint-pentagon machinery: the 19-point pair search, the 2m+9 separable
// partition, and the two lower-bound witness pipelines. Existence of each
// target is guaranteed for valid inputs; the executable semantics are
// complete searches over separating lines with every result re-verified.

#include <algorithm>
#include <exception>

#include "holes_internal.hpp"
#include "pentahole/pentagons.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pentahole {

using detail::find5_in_config;
using detail::generic_direction;
using detail::make_verified_hole;
using detail::projection_order;

const char* witness_method_name(WitnessMethod m) {
    switch (m) {
        case WitnessMethod::Strip5n47: return "strip_5n_47";
        case WitnessMethod::Doubling3n28: return "doubling_3n_28";
        case WitnessMethod::Direct: return "direct";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Dividing diagonals

std::vector<DividingDiagonal> dividing_diagonals(const PointSet& s) {
    if (s.size() < 4) fail(Errc::HullTooSmall, "need at least 4 points");
    const std::vector<Point> hull = hull_cycle(s.points());
    const std::size_t k = hull.size();
    if (k < 4) fail(Errc::HullTooSmall, "hull is a triangle");
    const long long parity = static_cast<long long>(k % 2);
    std::vector<Point> hull_sorted = hull;
    std::sort(hull_sorted.begin(), hull_sorted.end());

    std::vector<DividingDiagonal> out;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (j == i + 1 || (i == 0 && j == k - 1)) continue; // hull edge
            long long hull_l = 0, hull_r = 0, int_l = 0, int_r = 0;
            for (const Point& p : s.points()) {
                if (p == hull[i] || p == hull[j]) continue;
                const bool on_hull =
                    std::binary_search(hull_sorted.begin(), hull_sorted.end(), p);
                const int sg = orient_sign(hull[i], hull[j], p);
                if (on_hull)
                    (sg > 0 ? hull_l : hull_r)++;
                else
                    (sg > 0 ? int_l : int_r)++;
            }
            if (std::abs(hull_l - hull_r) != parity) continue;
            out.push_back(DividingDiagonal{hull[i], hull[j], std::min(int_l, int_r),
                                           std::max(int_l, int_r)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Two disjoint 5-holes

namespace {

VerifyResult verify_pair_impl(const DisjointPair& dp, const PointSet& s);

// Attempt one separating line through host points p, q: each of the <= 4
// side assignments of p and q, a 5-hole sought on both sides.
std::optional<DisjointPair> try_separating_line(const PointSet& s, Point p, Point q) {
    std::vector<Point> left, right;
    left.reserve(s.size());
    right.reserve(s.size());
    for (const Point& t : s.points()) {
        if (t == p || t == q) continue;
        (orient_sign(p, q, t) > 0 ? left : right).push_back(t);
    }
    struct Assign {
        int p_side, q_side;
    };
    static constexpr Assign kAssignments[4] = {{+1, +1}, {-1, -1}, {+1, -1}, {-1, +1}};
    for (const Assign& asg : kAssignments) {
        std::vector<Point> a_side = left, b_side = right;
        (asg.p_side > 0 ? a_side : b_side).push_back(p);
        (asg.q_side > 0 ? a_side : b_side).push_back(q);
        if (a_side.size() < 5 || b_side.size() < 5) continue;
        const std::optional<Hole> ha = find_5hole(PointSet::unchecked(std::move(a_side)));
        if (!ha) continue;
        const std::optional<Hole> hb = find_5hole(PointSet::unchecked(std::move(b_side)));
        if (!hb) continue;
        DisjointPair pair{make_verified_hole(ha->polygon.vertices(), s),
                          make_verified_hole(hb->polygon.vertices(), s), p, q, asg.p_side,
                          asg.q_side};
        const VerifyResult v = verify_pair_impl(pair, s);
        if (!v.ok)
            throw ContractViolation("pair candidate failed verification: " + v.reasons.front());
        return pair;
    }
    return std::nullopt;
}

std::optional<DisjointPair> scan_lines(const PointSet& s,
                                       const std::vector<std::pair<Point, Point>>& lines,
                                       bool parallel) {
#ifdef _OPENMP
    if (parallel && lines.size() > 1) {
        constexpr std::size_t kBlock = 32;
        for (std::size_t base = 0; base < lines.size(); base += kBlock) {
            const std::size_t count = std::min(kBlock, lines.size() - base);
            std::vector<std::optional<DisjointPair>> found(count);
            std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
            for (long long t = 0; t < static_cast<long long>(count); ++t) {
                const auto ti = static_cast<std::size_t>(t);
                try {
                    found[ti] = try_separating_line(s, lines[base + ti].first,
                                                    lines[base + ti].second);
                } catch (...) {
                    errors[ti] = std::current_exception();
                }
            }
            for (std::size_t t = 0; t < count; ++t) {
                if (errors[t]) std::rethrow_exception(errors[t]);
                if (found[t]) return found[t];
            }
        }
        return std::nullopt;
    }
#endif
    (void)parallel;
    for (const auto& [p, q] : lines)
        if (auto r = try_separating_line(s, p, q)) return r;
    return std::nullopt;
}

} // namespace

std::optional<DisjointPair> find_two_disjoint_5holes(const PointSet& s,
                                                     const PairSearchOptions& opt) {
    if (s.size() < 10) return std::nullopt; // two disjoint pentagons need 10 points

    if (opt.guided_phase) {
        const std::vector<Point> hull = hull_cycle(s.points());
        if (hull.size() >= 4) {
            std::vector<std::pair<Point, Point>> lines;
            for (const DividingDiagonal& d : dividing_diagonals(s)) lines.emplace_back(d.p, d.q);
            if (auto r = scan_lines(s, lines, opt.parallel)) return r;
        }
    }

    // Complete phase: two disjoint convex bodies always admit a separating
    // line through two host points, so this scan cannot miss.
    std::vector<std::pair<Point, Point>> lines;
    const std::vector<Point>& pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) lines.emplace_back(pts[i], pts[j]);
    if (auto r = scan_lines(s, lines, opt.parallel)) return r;

    if (s.size() >= 19)
        throw ContractViolation("a valid set of 19+ points must contain two disjoint 5-holes");
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// UVW labeling and the separable partition

UVWLabeling label_uvw(const PointSet& s, int m, int anchor_index) {
    if (m < 1) fail(Errc::SizeMismatch, "m must be positive");
    if (s.size() != static_cast<std::size_t>(2 * m + 9))
        fail(Errc::SizeMismatch, "labeling needs exactly 2m+9 points");
    const std::vector<Point> hull = hull_cycle(s.points());
    const int h = static_cast<int>(hull.size());
    if (anchor_index < 0 || anchor_index >= h)
        fail(Errc::PreconditionViolated, "anchor index out of range");
    const Point u1 = hull[static_cast<std::size_t>(anchor_index)];
    const Point succ = hull[static_cast<std::size_t>((anchor_index + 1) % h)];
    const Point pred = hull[static_cast<std::size_t>((anchor_index + h - 1) % h)];

    std::vector<Point> rest;
    rest.reserve(s.size() - 1);
    for (const Point& p : s.points())
        if (!(p == u1)) rest.push_back(p);
    const std::vector<Point> order = angular_sweep(u1, succ, rest);
    if (!(order.front() == succ) || !(order.back() == pred))
        throw ContractViolation("angular sweep does not run hull edge to hull edge");

    UVWLabeling lab;
    lab.u.push_back(u1);
    std::size_t idx = 0;
    for (int i = 2; i <= m; ++i) lab.u.push_back(order[idx++]);
    for (int i = 1; i <= 9; ++i) lab.v.push_back(order[idx++]);
    for (int i = 1; i <= m; ++i) lab.w.push_back(order[idx++]);
    return lab;
}

namespace {

// Splits S minus the middle set into two size-m parts with pairwise disjoint
// hulls by scanning separating lines through host point pairs.
struct RestSplit {
    std::vector<Point> s1, s3;
};

std::optional<RestSplit> split_rest(const PointSet& s, const std::vector<Point>& middle, int m,
                                    const std::vector<Point>& middle_hull) {
    std::vector<Point> mid_sorted = middle;
    std::sort(mid_sorted.begin(), mid_sorted.end());
    std::vector<Point> rest;
    for (const Point& p : s.points())
        if (!std::binary_search(mid_sorted.begin(), mid_sorted.end(), p)) rest.push_back(p);

    const std::vector<Point>& pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Point p = pts[i], q = pts[j];
            std::vector<Point> left, right, online;
            for (const Point& t : rest) {
                if (t == p || t == q) {
                    online.push_back(t);
                    continue;
                }
                (orient_sign(p, q, t) > 0 ? left : right).push_back(t);
            }
            const std::size_t combos = static_cast<std::size_t>(1) << online.size();
            for (std::size_t mask = 0; mask < combos; ++mask) {
                std::vector<Point> s1 = left, s3 = right;
                for (std::size_t b = 0; b < online.size(); ++b)
                    ((mask >> b) & 1 ? s1 : s3).push_back(online[b]);
                if (s1.size() != static_cast<std::size_t>(m)) continue;
                const std::vector<Point> h1 = hull_cycle(s1);
                const std::vector<Point> h3 = hull_cycle(s3);
                if (!convex_regions_disjoint(h1, h3)) continue;
                if (!convex_regions_disjoint(h1, middle_hull)) continue;
                if (!convex_regions_disjoint(h3, middle_hull)) continue;
                std::sort(s1.begin(), s1.end());
                std::sort(s3.begin(), s3.end());
                return RestSplit{std::move(s1), std::move(s3)};
            }
        }
    }
    return std::nullopt;
}

// Candidate middle sets: V itself, then V with one or two members swapped
// for points of U or W. Two swaps always suffice for a separable middle.
template <class Fn>
void for_each_middle_candidate(const UVWLabeling& lab, Fn&& fn) {
    std::vector<Point> uw = lab.u;
    uw.insert(uw.end(), lab.w.begin(), lab.w.end());

    if (fn(lab.v)) return;
    for (std::size_t ri = 0; ri < lab.v.size(); ++ri)
        for (const Point& add : uw) {
            std::vector<Point> cand;
            cand.reserve(9);
            for (std::size_t t = 0; t < lab.v.size(); ++t)
                if (t != ri) cand.push_back(lab.v[t]);
            cand.push_back(add);
            if (fn(cand)) return;
        }
    for (std::size_t ri = 0; ri < lab.v.size(); ++ri)
        for (std::size_t rj = ri + 1; rj < lab.v.size(); ++rj)
            for (std::size_t ai = 0; ai < uw.size(); ++ai)
                for (std::size_t aj = ai + 1; aj < uw.size(); ++aj) {
                    std::vector<Point> cand;
                    cand.reserve(9);
                    for (std::size_t t = 0; t < lab.v.size(); ++t)
                        if (t != ri && t != rj) cand.push_back(lab.v[t]);
                    cand.push_back(uw[ai]);
                    cand.push_back(uw[aj]);
                    if (fn(cand)) return;
                }
}

} // namespace

SeparablePartition separable_partition(const PointSet& s, int m) {
    if (m < 1) fail(Errc::SizeMismatch, "m must be positive");
    if (s.size() != static_cast<std::size_t>(2 * m + 9))
        fail(Errc::SizeMismatch, "partition needs exactly 2m+9 points");

    const std::vector<Point> hull = hull_cycle(s.points());
    std::optional<SeparablePartition> result;
    for (int anchor = 0; anchor < static_cast<int>(hull.size()) && !result; ++anchor) {
        const UVWLabeling lab = label_uvw(s, m, anchor);
        for_each_middle_candidate(lab, [&](const std::vector<Point>& middle) -> bool {
            const std::optional<std::vector<Point>> five = find5_in_config(middle);
            if (!five) return false;
            const std::vector<Point> mid_hull = hull_cycle(middle);
            std::optional<RestSplit> split = split_rest(s, middle, m, mid_hull);
            if (!split) return false;
            std::vector<Point> s2 = middle;
            std::sort(s2.begin(), s2.end());
            const PointSet middle_set = PointSet::unchecked(s2);
            SeparablePartition part{std::move(split->s1), s2, std::move(split->s3),
                                    make_verified_hole(*five, middle_set), m};
            const VerifyResult v = verify_partition(part, s);
            if (!v.ok)
                throw ContractViolation("partition candidate failed verification: " +
                                        v.reasons.front());
            result = std::move(part);
            return true;
        });
    }
    if (!result)
        throw ContractViolation("no separable partition found for a valid 2m+9 set");
    return *result;
}

// ---------------------------------------------------------------------------
// Witness pipelines

namespace {

Hole rehost(const Hole& h, const PointSet& s) {
    return make_verified_hole(h.polygon.vertices(), s);
}

void append_pair_holes(const PointSet& host, const std::vector<Point>& block,
                       std::vector<Hole>& out) {
    const std::optional<DisjointPair> pr =
        find_two_disjoint_5holes(PointSet::unchecked(block));
    if (!pr) throw ContractViolation("19-point block yielded no disjoint pair");
    out.push_back(rehost(pr->a, host));
    out.push_back(rehost(pr->b, host));
}

} // namespace

WitnessReport witness_5n_47(const PointSet& s) {
    const int n = static_cast<int>(s.size());
    WitnessReport rep;
    rep.n = n;
    rep.method = WitnessMethod::Strip5n47;
    rep.bound_claimed = 5LL * n / 47;

    const std::int64_t dir = generic_direction(s.points());
    rep.sweep_dir = dir;
    const std::vector<Point> order = projection_order(s.points(), dir);

    int pos = 0;
    const int full_strips = n / 47;
    for (int strip = 0; strip < full_strips; ++strip) {
        std::vector<Point> chunk(order.begin() + pos, order.begin() + pos + 47);
        const SeparablePartition part =
            separable_partition(PointSet::unchecked(std::move(chunk)), 19);
        append_pair_holes(s, part.s1, rep.holes);
        append_pair_holes(s, part.s3, rep.holes);
        rep.holes.push_back(rehost(part.hole, s));
        rep.strip_plan.push_back({pos, pos + 47, "strip47-partition-m19"});
        pos += 47;
    }
    int remaining = n - pos;
    while (remaining >= 19) {
        std::vector<Point> chunk(order.begin() + pos, order.begin() + pos + 19);
        append_pair_holes(s, chunk, rep.holes);
        rep.strip_plan.push_back({pos, pos + 19, "block19-pair"});
        pos += 19;
        remaining -= 19;
    }
    if (remaining >= 10) {
        std::vector<Point> chunk(order.begin() + pos, order.begin() + pos + remaining);
        const std::optional<Hole> h = find_5hole(PointSet::unchecked(std::move(chunk)));
        if (!h) throw ContractViolation("10..18-point block yielded no 5-hole");
        rep.holes.push_back(rehost(*h, s));
        rep.strip_plan.push_back({pos, pos + remaining, "block-single-hole"});
        pos += remaining;
        remaining = 0;
    }
    if (remaining > 0) rep.strip_plan.push_back({pos, pos + remaining, "leftover"});

    std::sort(rep.holes.begin(), rep.holes.end());
    rep.verified = verify_witness(rep, s).ok;
    if (!rep.verified) throw ContractViolation("strip witness failed self-verification");
    return rep;
}

namespace {

std::vector<Hole> doubling_rec(const PointSet& host, const std::vector<Point>& pts, int k) {
    std::vector<Hole> out;
    if (k == 1) {
        append_pair_holes(host, pts, out);
        return out;
    }
    const int m = (static_cast<int>(pts.size()) - 9) / 2;
    const SeparablePartition part = separable_partition(PointSet::unchecked(pts), m);
    std::vector<Hole> left = doubling_rec(host, part.s1, k - 1);
    std::vector<Hole> right = doubling_rec(host, part.s3, k - 1);
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
    out.push_back(rehost(part.hole, host));
    return out;
}

} // namespace

WitnessReport witness_doubling(const PointSet& s) {
    const long long n = static_cast<long long>(s.size());
    int k = 0;
    for (long long g = 19, kk = 1; g <= n; g = 2 * g + 9, ++kk)
        if (g == n) {
            k = static_cast<int>(kk);
            break;
        }
    if (k == 0)
        fail(Errc::NotADoublingSize, "size must be 28*2^(k-1) - 9 for some k >= 1");

    WitnessReport rep;
    rep.n = static_cast<int>(n);
    rep.method = WitnessMethod::Doubling3n28;
    rep.bound_claimed = (3 * n - 1) / 28;
    rep.holes = doubling_rec(s, s.points(), k);
    std::sort(rep.holes.begin(), rep.holes.end());
    rep.verified = verify_witness(rep, s).ok;
    if (!rep.verified) throw ContractViolation("doubling witness failed self-verification");
    return rep;
}

// ---------------------------------------------------------------------------
// Verification (construction-independent re-checks)

namespace {

bool hole_ok(const Hole& h, const PointSet& s, int index, VerifyResult& out) {
    if (h.k() != 5) {
        out.flag("hole " + std::to_string(index) + " is not a pentagon");
        return false;
    }
    for (const Point& v : h.polygon.vertices())
        if (!s.contains(v)) {
            out.flag("hole " + std::to_string(index) + " has a vertex outside the host set");
            return false;
        }
    if (!is_empty_convex(h.polygon.vertices(), s)) {
        out.flag("hole " + std::to_string(index) + " is not empty in the host set");
        return false;
    }
    return true;
}

VerifyResult verify_pair_impl(const DisjointPair& dp, const PointSet& s) {
    VerifyResult out;
    hole_ok(dp.a, s, 0, out);
    hole_ok(dp.b, s, 1, out);
    for (const Point& v : dp.a.polygon.vertices())
        for (const Point& w : dp.b.polygon.vertices())
            if (v == w) out.flag("holes share a vertex");
    if (!convex_polygons_disjoint(dp.a.polygon, dp.b.polygon))
        out.flag("hole hulls intersect");
    for (const Point& v : dp.a.polygon.vertices()) {
        if (v == dp.sep_p && dp.p_side == +1) continue;
        if (v == dp.sep_q && dp.q_side == +1) continue;
        if (orient_sign(dp.sep_p, dp.sep_q, v) <= 0)
            out.flag("hole a not strictly left of the separator");
    }
    for (const Point& v : dp.b.polygon.vertices()) {
        if (v == dp.sep_p && dp.p_side == -1) continue;
        if (v == dp.sep_q && dp.q_side == -1) continue;
        if (orient_sign(dp.sep_p, dp.sep_q, v) >= 0)
            out.flag("hole b not strictly right of the separator");
    }
    return out;
}

} // namespace

VerifyResult verify_pair(const DisjointPair& pair, const PointSet& s) {
    return verify_pair_impl(pair, s);
}

VerifyResult verify_partition(const SeparablePartition& part, const PointSet& s) {
    VerifyResult out;
    if (part.s1.size() != static_cast<std::size_t>(part.m) ||
        part.s3.size() != static_cast<std::size_t>(part.m))
        out.flag("outer parts do not have m points each");
    if (part.s2.size() != 9) out.flag("middle part does not have 9 points");
    std::vector<Point> all = part.s1;
    all.insert(all.end(), part.s2.begin(), part.s2.end());
    all.insert(all.end(), part.s3.begin(), part.s3.end());
    std::sort(all.begin(), all.end());
    if (all != s.points()) out.flag("parts do not partition the host set");
    const std::vector<Point> h1 = hull_cycle(part.s1);
    const std::vector<Point> h2 = hull_cycle(part.s2);
    const std::vector<Point> h3 = hull_cycle(part.s3);
    if (!convex_regions_disjoint(h1, h2)) out.flag("hulls of s1 and s2 intersect");
    if (!convex_regions_disjoint(h2, h3)) out.flag("hulls of s2 and s3 intersect");
    if (!convex_regions_disjoint(h1, h3)) out.flag("hulls of s1 and s3 intersect");
    if (part.hole.k() != 5) out.flag("middle hole is not a pentagon");
    const PointSet mid = PointSet::unchecked(part.s2);
    bool in_mid = true;
    for (const Point& v : part.hole.polygon.vertices())
        if (!mid.contains(v)) in_mid = false;
    if (!in_mid)
        out.flag("hole vertices are not all in the middle part");
    else if (!is_empty_convex(part.hole.polygon.vertices(), mid))
        out.flag("middle hole is not empty in s2");
    return out;
}

VerifyResult verify_witness(const WitnessReport& report, const PointSet& s) {
    VerifyResult out;
    if (report.n != static_cast<int>(s.size()))
        out.flag("report size does not match the host set");
    for (std::size_t i = 0; i < report.holes.size(); ++i)
        hole_ok(report.holes[i], s, static_cast<int>(i), out);
    for (std::size_t i = 0; i < report.holes.size(); ++i)
        for (std::size_t j = i + 1; j < report.holes.size(); ++j)
            if (!convex_polygons_disjoint(report.holes[i].polygon, report.holes[j].polygon))
                out.flag("holes " + std::to_string(i) + " and " + std::to_string(j) +
                         " intersect");
    if (static_cast<long long>(report.holes.size()) < report.bound_claimed)
        out.flag("fewer holes than the claimed bound");
    const long long n = report.n;
    if (report.method == WitnessMethod::Strip5n47 && report.bound_claimed != 5 * n / 47)
        out.flag("claimed bound does not match floor(5n/47)");
    if (report.method == WitnessMethod::Doubling3n28) {
        bool doubling_size = false;
        for (long long g = 19; g <= n; g = 2 * g + 9)
            if (g == n) doubling_size = true;
        if (!doubling_size)
            out.flag("size is not of the doubling form");
        else if (report.bound_claimed != (3 * n - 1) / 28)
            out.flag("claimed bound does not match (3n-1)/28");
    }
    return out;
}

} // namespace pentahole
