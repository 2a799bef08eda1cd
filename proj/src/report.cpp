#include "pentahole/report.hpp"

#include <algorithm>

namespace pentahole {

using nlohmann::json;

json point_ref(Point p, const PointSet& s) {
    const std::ptrdiff_t idx = s.index_of(p);
    if (idx < 0)
        throw ContractViolation("report point is not a member of the canonical set");
    json j;
    j["index"] = idx;
    j["x"] = p.x;
    j["y"] = p.y;
    return j;
}

namespace {

json point_list(const std::vector<Point>& pts, const PointSet& s) {
    json arr = json::array();
    for (const Point& p : pts) arr.push_back(point_ref(p, s));
    return arr;
}

} // namespace

json hole_to_json(const Hole& h, const PointSet& s) {
    json j;
    j["type"] = "hole";
    j["k"] = h.k();
    j["vertices"] = point_list(h.polygon.vertices(), s);
    return j;
}

json pair_to_json(const DisjointPair& pair, const PointSet& s) {
    auto side_name = [](int side) {
        return side > 0 ? "a" : (side < 0 ? "b" : "none");
    };
    json j;
    j["type"] = "disjoint_pair";
    j["a"] = hole_to_json(pair.a, s);
    j["b"] = hole_to_json(pair.b, s);
    j["separator"] = {{"p", point_ref(pair.sep_p, s)},
                      {"q", point_ref(pair.sep_q, s)},
                      {"p_side", side_name(pair.p_side)},
                      {"q_side", side_name(pair.q_side)}};
    return j;
}

json partition_to_json(const SeparablePartition& part, const PointSet& s) {
    json j;
    j["type"] = "separable_partition";
    j["m"] = part.m;
    j["s1"] = point_list(part.s1, s);
    j["s2"] = point_list(part.s2, s);
    j["s3"] = point_list(part.s3, s);
    j["hole"] = hole_to_json(part.hole, s);
    return j;
}

json witness_to_json(const WitnessReport& rep, const PointSet& s) {
    json j;
    j["type"] = "witness_report";
    j["n"] = rep.n;
    j["method"] = witness_method_name(rep.method);
    j["bound_claimed"] = rep.bound_claimed;
    j["hole_count"] = rep.holes.size();
    json holes = json::array();
    for (const Hole& h : rep.holes) holes.push_back(hole_to_json(h, s));
    j["holes"] = holes;
    json plan = json::array();
    for (const StripPlanEntry& e : rep.strip_plan)
        plan.push_back({{"begin", e.begin}, {"end", e.end}, {"method", e.method}});
    j["strip_plan"] = plan;
    j["sweep_dir"] = rep.sweep_dir;
    j["verified"] = rep.verified;
    return j;
}

json classification_to_json(const NinePointClassification& cls, const PointSet& s) {
    json j;
    j["type"] = "ninepoint_classification";
    if (cls.has_five_hole()) {
        j["verdict"] = "has_five_hole";
        j["hole"] = hole_to_json(*cls.hole, s);
    } else {
        j["verdict"] = "no_five_hole";
    }
    j["layer_signature"] = cls.signature.counts;
    return j;
}

json hull_to_json(const ConvexPolygon& poly, const PointSet& s) {
    json j;
    j["type"] = "hull";
    j["vertices"] = point_list(poly.vertices(), s);
    return j;
}

json layers_to_json(const ConvexLayers& layers, const PointSet& s) {
    json j;
    j["type"] = "layers";
    j["signature"] = layers.signature.counts;
    json arr = json::array();
    for (const auto& layer : layers.layers) arr.push_back(point_list(layer, s));
    j["layers"] = arr;
    return j;
}

json hole_list_to_json(const std::vector<Hole>& holes, int k, const PointSet& s) {
    json j;
    j["type"] = "hole_list";
    j["k"] = k;
    j["count"] = holes.size();
    json arr = json::array();
    for (const Hole& h : holes) arr.push_back(hole_to_json(h, s));
    j["holes"] = arr;
    return j;
}

json report_document(const std::string& command, std::optional<std::uint64_t> seed,
                     const PointSet& s, json payload, bool verified) {
    json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    if (seed) doc["seed"] = *seed;
    doc["input_digest"] = s.digest_hex();
    doc["n"] = s.size();
    doc["payload"] = std::move(payload);
    doc["verified"] = verified;
    return doc;
}

std::string dump_report(const json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Re-verification of parsed documents

namespace {

// Extracts a vertex list, checking the dual index/coordinate encoding.
std::optional<std::vector<Point>> read_points(const json& arr, const PointSet& s,
                                              VerifyResult& out, const std::string& what) {
    if (!arr.is_array()) {
        out.flag(what + ": not an array");
        return std::nullopt;
    }
    std::vector<Point> pts;
    for (const json& e : arr) {
        if (!e.contains("x") || !e.contains("y") || !e.contains("index")) {
            out.flag(what + ": point without index/x/y");
            return std::nullopt;
        }
        const Point p{e["x"].get<std::int64_t>(), e["y"].get<std::int64_t>()};
        const auto idx = e["index"].get<std::ptrdiff_t>();
        if (idx < 0 || idx >= static_cast<std::ptrdiff_t>(s.size()) || !(s[static_cast<std::size_t>(idx)] == p)) {
            out.flag(what + ": index and coordinates disagree with the host set");
            return std::nullopt;
        }
        pts.push_back(p);
    }
    return pts;
}

// Raw 5-hole check on a vertex list, tolerant of malformed content.
bool check_hole_vertices(const std::vector<Point>& five, const PointSet& s, VerifyResult& out,
                         const std::string& what) {
    if (five.size() != 5) {
        out.flag(what + ": expected 5 vertices");
        return false;
    }
    for (const Point& v : five)
        if (!s.contains(v)) {
            out.flag(what + ": SubsetNotInHost");
            return false;
        }
    if (!is_empty_convex(five, s)) {
        out.flag(what + ": not an empty convex pentagon");
        return false;
    }
    return true;
}

} // namespace

VerifyResult verify_report_document(const json& doc, const PointSet& s) {
    VerifyResult out;
    if (!doc.contains("payload")) {
        out.flag("document has no payload");
        return out;
    }
    if (doc.contains("input_digest") && doc["input_digest"].get<std::string>() != s.digest_hex())
        out.flag("input digest does not match the point set");
    const json& p = doc["payload"];
    const std::string type = p.value("type", "");

    if (type == "hole") {
        auto pts = read_points(p["vertices"], s, out, "hole");
        if (pts) check_hole_vertices(*pts, s, out, "hole");
        return out;
    }

    if (type == "disjoint_pair") {
        auto a = read_points(p["a"]["vertices"], s, out, "hole a");
        auto b = read_points(p["b"]["vertices"], s, out, "hole b");
        if (!a || !b) return out;
        const bool a_ok = check_hole_vertices(*a, s, out, "hole a");
        const bool b_ok = check_hole_vertices(*b, s, out, "hole b");
        if (a_ok && b_ok &&
            !convex_regions_disjoint(hull_cycle(*a), hull_cycle(*b)))
            out.flag("pair: hole hulls intersect");
        return out;
    }

    if (type == "separable_partition") {
        auto s1 = read_points(p["s1"], s, out, "s1");
        auto s2 = read_points(p["s2"], s, out, "s2");
        auto s3 = read_points(p["s3"], s, out, "s3");
        auto hv = read_points(p["hole"]["vertices"], s, out, "partition hole");
        if (!s1 || !s2 || !s3 || !hv) return out;
        std::sort(s1->begin(), s1->end());
        std::sort(s2->begin(), s2->end());
        std::sort(s3->begin(), s3->end());
        if (hull_cycle(*hv).size() != 5) {
            out.flag("partition hole: not a convex pentagon");
            return out;
        }
        const SeparablePartition part{
            *s1, *s2, *s3,
            Hole{ConvexPolygon::hull_of(*hv), PointSet::unchecked(*s2).digest()},
            p.value("m", 0)};
        const VerifyResult inner = verify_partition(part, s);
        for (const std::string& r : inner.reasons) out.flag(r);
        return out;
    }

    if (type == "witness_report") {
        std::vector<std::vector<Point>> holes;
        bool structural_ok = true;
        for (const json& hj : p["holes"]) {
            auto pts = read_points(hj["vertices"], s, out, "witness hole");
            if (!pts) return out;
            if (!check_hole_vertices(*pts, s, out, "witness hole")) structural_ok = false;
            holes.push_back(*pts);
        }
        if (structural_ok)
            for (std::size_t i = 0; i < holes.size(); ++i)
                for (std::size_t j = i + 1; j < holes.size(); ++j)
                    if (!convex_regions_disjoint(hull_cycle(holes[i]), hull_cycle(holes[j])))
                        out.flag("witness holes " + std::to_string(i) + " and " +
                                 std::to_string(j) + " intersect");
        const long long bound = p.value("bound_claimed", 0LL);
        if (static_cast<long long>(holes.size()) < bound)
            out.flag("fewer holes than the claimed bound");
        const std::string method = p.value("method", "direct");
        const long long n = static_cast<long long>(s.size());
        if (method == "strip_5n_47" && bound != 5 * n / 47)
            out.flag("claimed bound does not match floor(5n/47)");
        if (method == "doubling_3n_28" && bound != (3 * n - 1) / 28)
            out.flag("claimed bound does not match (3n-1)/28");
        return out;
    }

    if (type == "ninepoint_classification") {
        if (s.size() != 9) {
            out.flag("classification host is not a 9-point set");
            return out;
        }
        const NinePointClassification actual = classify_9points(s);
        const std::string verdict = p.value("verdict", "");
        if (verdict == "has_five_hole") {
            auto pts = read_points(p["hole"]["vertices"], s, out, "classification hole");
            if (pts) check_hole_vertices(*pts, s, out, "classification hole");
            if (!actual.has_five_hole()) out.flag("verdict disagrees with the oracle");
        } else if (verdict == "no_five_hole") {
            if (actual.has_five_hole()) out.flag("verdict disagrees with the oracle");
            const auto sig = p.value("layer_signature", std::vector<int>{});
            if (sig != actual.signature.counts) out.flag("layer signature mismatch");
        } else {
            out.flag("unknown verdict");
        }
        return out;
    }

    out.flag("unknown payload type: " + type);
    return out;
}

} // namespace pentahole
