#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pentahole/geom.hpp"

namespace pentahole {

// An empty convex k-gon of a host set, identified by the host digest.
struct Hole {
    ConvexPolygon polygon;
    std::uint64_t host_digest = 0;
    int k() const { return static_cast<int>(polygon.size()); }
    friend bool operator==(const Hole& a, const Hole& b) {
        return a.polygon.vertices() == b.polygon.vertices();
    }
    friend bool operator<(const Hole& a, const Hole& b) {
        return a.polygon.vertices() < b.polygon.vertices();
    }
};

// True iff `subset` (taken from S) is in convex position and no other point
// of S lies strictly inside its hull.
bool is_empty_convex(std::span<const Point> subset, const PointSet& s);

struct OracleOptions {
    std::uint64_t budget = 0; // 0: use default_oracle_budget()
    bool parallel = true;
};

// Subset-test cap for the enumeration oracle: PENTAHOLE_ORACLE_BUDGET or 10^8.
std::uint64_t default_oracle_budget();

// Every k-hole of S, by exhaustive subset testing, in canonical order
// (lexicographic by canonical vertex indices). The brute-force oracle that
// every constructive path is checked against.
std::vector<Hole> enumerate_k_holes(const PointSet& s, int k, const OracleOptions& opt = {});
std::vector<Hole> enumerate_k_holes_serial(const PointSet& s, int k, const OracleOptions& opt = {});
std::vector<Hole> enumerate_k_holes_parallel(const PointSet& s, int k,
                                             const OracleOptions& opt = {});

// Constructive finders. Each verifies its result against the host before
// returning and throws ContractViolation on any internal inconsistency.
Hole find_5hole_hexagon(const PointSet& s);
Hole find_5hole_pentagon_hull(const PointSet& z); // hull = 5, >= 2 interior
Hole find_5hole_quad_hull(const PointSet& z);     // hull = 4, >= 5 interior
Hole find_5hole_9pts_hull4plus(const PointSet& z);

bool is_k_redundant(Point p, const PointSet& t, int k = 5);

// Some verified 5-hole whenever one exists (structured paths first, oracle
// as the safety net); nullopt exactly when the set has no 5-hole.
std::optional<Hole> find_5hole(const PointSet& s);

struct NinePointClassification {
    std::optional<Hole> hole;  // engaged iff a 5-hole exists
    LayerSignature signature;
    bool has_five_hole() const { return hole.has_value(); }
};

NinePointClassification classify_9points(const PointSet& z);

} // namespace pentahole
