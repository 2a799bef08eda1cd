#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentahole/holes.hpp"

namespace pentahole {

// Two vertex-disjoint 5-holes with a certifying separator: the directed line
// sep_p -> sep_q has every vertex of `a` strictly on the left and every
// vertex of `b` strictly on the right, except that a separator endpoint may
// itself be a vertex of the hole its side tag assigns it to (+1 left/a,
// -1 right/b, 0 unassigned).
struct DisjointPair {
    Hole a, b;
    Point sep_p, sep_q;
    int p_side = 0;
    int q_side = 0;
};

struct PairSearchOptions {
    bool parallel = true;
    bool guided_phase = true; // dividing-diagonal splits before the full line scan
};

// Some pair of disjoint 5-holes iff one exists; guided hull-diagonal splits
// first, then a complete scan of separating lines through host point pairs.
// Guaranteed to succeed on every valid set of 19 or more points.
std::optional<DisjointPair> find_two_disjoint_5holes(const PointSet& s,
                                                     const PairSearchOptions& opt = {});

struct DividingDiagonal {
    Point p, q;              // non-adjacent hull vertices
    long long interior_a;    // interior points on the two open sides, a <= b
    long long interior_b;
};

// Hull diagonals balancing the remaining hull vertices as evenly as parity
// allows, annotated with their interior splits.
std::vector<DividingDiagonal> dividing_diagonals(const PointSet& s);

// The inductive angular labeling around a hull anchor: U = {u1..um},
// V = {v1..v9}, W = {w1..wm} in sweep order; u1u2 (for m >= 2) and u1wm are
// hull edges.
struct UVWLabeling {
    std::vector<Point> u, v, w;
};

UVWLabeling label_uvw(const PointSet& s, int m, int anchor_index);

// Partition of a (2m+9)-set into hull-disjoint parts of sizes m, 9, m with a
// verified 5-hole in the middle part.
struct SeparablePartition {
    std::vector<Point> s1, s2, s3; // canonical order each
    Hole hole;                     // 5-hole of s2, host digest of s2
    int m = 0;
};

SeparablePartition separable_partition(const PointSet& s, int m);

enum class WitnessMethod { Strip5n47, Doubling3n28, Direct };

const char* witness_method_name(WitnessMethod m);

struct StripPlanEntry {
    int begin = 0, end = 0; // range in sweep order
    std::string method;
};

struct WitnessReport {
    int n = 0;
    std::vector<Hole> holes; // pairwise hull-disjoint, canonical order
    long long bound_claimed = 0;
    WitnessMethod method = WitnessMethod::Direct;
    bool verified = false;
    std::vector<StripPlanEntry> strip_plan;
    std::int64_t sweep_dir = 0; // strips project onto x + sweep_dir * y
};

// >= floor(5n/47) pairwise-disjoint verified 5-holes via sweep strips of 47
// (partitioned 19+9+19) plus greedy remainder blocks of 19 and 10..18.
WitnessReport witness_5n_47(const PointSet& s);

// >= (3n-1)/28 holes for n = 28*2^(k-1) - 9, by recursive partitioning.
WitnessReport witness_doubling(const PointSet& s);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> reasons;
    void flag(std::string reason) {
        ok = false;
        reasons.push_back(std::move(reason));
    }
};

// Re-checks every hole and every pairwise disjointness from scratch using
// only the core predicates; trusts nothing from the construction path.
VerifyResult verify_witness(const WitnessReport& report, const PointSet& s);
VerifyResult verify_pair(const DisjointPair& pair, const PointSet& s);
VerifyResult verify_partition(const SeparablePartition& part, const PointSet& s);

} // namespace pentahole
