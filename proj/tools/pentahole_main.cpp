// Command-line surface: point-set generation, hole finding, disjoint-pair
// and partition construction, witness pipelines and report verification.
//
// Exit codes: 0 success, 1 honest negative (nothing exists / verification
// failed), 2 invalid input, 3 contract violation (implementation fault).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pentahole/io.hpp"
#include "pentahole/report.hpp"
#include "pentahole/svg.hpp"

using namespace pentahole;

namespace {

struct CommonOut {
    std::string in_path;
    std::string json_path;
    std::string svg_path;
};

void add_common(CLI::App* cmd, CommonOut& out, bool need_in = true) {
    auto* in = cmd->add_option("--in", out.in_path, "input points file");
    if (need_in) in->required();
    cmd->add_option("--json,--out", out.json_path, "write the JSON report here (default: stdout)");
    cmd->add_option("--svg", out.svg_path, "also render an SVG figure");
}

void emit(const CommonOut& io, const PointSet& s, const nlohmann::json& doc,
          const SvgOverlays& overlays) {
    const std::string text = dump_report(doc);
    if (io.json_path.empty())
        std::fputs(text.c_str(), stdout);
    else
        write_file(io.json_path, text);
    if (!io.svg_path.empty()) render_svg_file(s, overlays, io.svg_path);
}

std::vector<Point> cycle_of(const Hole& h) { return h.polygon.vertices(); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pentahole: empty convex pentagons and disjoint-pentagon witnesses"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random general-position point set");
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::int64_t gen_coord_max = kCoordMax;
    std::string gen_out;
    gen->add_option("-n,--count", gen_n, "number of points")->required();
    gen->add_option("--seed", gen_seed, "RNG seed")->default_val(0);
    gen->add_option("--coord-max", gen_coord_max, "coordinate bound")->default_val(kCoordMax);
    gen->add_option("--out", gen_out, "output points file (default: stdout)");

    // point-set commands
    CommonOut hull_io, layers_io, hole_io, holes_io, pair_io, cls_io, part_io, wit_io, ver_io;
    auto* hull_cmd = app.add_subcommand("hull", "convex hull of the input");
    add_common(hull_cmd, hull_io);
    auto* layers_cmd = app.add_subcommand("layers", "convex layers and signature");
    add_common(layers_cmd, layers_io);
    auto* hole_cmd = app.add_subcommand("hole", "find one 5-hole");
    add_common(hole_cmd, hole_io);
    auto* holes_cmd = app.add_subcommand("holes", "enumerate all k-holes (oracle)");
    int holes_k = 5;
    holes_cmd->add_option("-k", holes_k, "hole size")->default_val(5);
    add_common(holes_cmd, holes_io);
    auto* pair_cmd = app.add_subcommand("pair", "find two disjoint 5-holes");
    add_common(pair_cmd, pair_io);
    auto* cls_cmd = app.add_subcommand("classify9", "classify a 9-point set");
    add_common(cls_cmd, cls_io);
    auto* part_cmd = app.add_subcommand("partition", "separable partition of a (2m+9)-point set");
    int part_m = 0;
    part_cmd->add_option("-m", part_m, "outer part size")->required();
    add_common(part_cmd, part_io);
    auto* wit_cmd = app.add_subcommand("witness", "disjoint 5-hole family with a bound");
    std::string wit_method = "strip";
    wit_cmd->add_option("--method", wit_method, "strip | doubling")
        ->check(CLI::IsMember({"strip", "doubling"}));
    add_common(wit_cmd, wit_io);
    auto* ver_cmd = app.add_subcommand("verify", "re-verify a JSON report against a points file");
    std::string ver_report;
    ver_cmd->add_option("--report", ver_report, "report JSON path")->required();
    add_common(ver_cmd, ver_io);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const PointSet s = random_general_position(gen_n, gen_seed, gen_coord_max);
            const std::string text = emit_points(s);
            if (gen_out.empty())
                std::fputs(text.c_str(), stdout);
            else
                write_file(gen_out, text);
            return 0;
        }

        if (hull_cmd->parsed()) {
            const PointSet s = load_points_file(hull_io.in_path);
            const ConvexPolygon h = convex_hull(s);
            emit(hull_io, s, report_document("hull", std::nullopt, s, hull_to_json(h, s), true),
                 SvgOverlays{{h.vertices()}, {}});
            return 0;
        }

        if (layers_cmd->parsed()) {
            const PointSet s = load_points_file(layers_io.in_path);
            const ConvexLayers l = convex_layers(s);
            SvgOverlays ov;
            for (const auto& layer : l.layers)
                if (layer.size() >= 3) ov.polygons.push_back(layer);
            emit(layers_io, s,
                 report_document("layers", std::nullopt, s, layers_to_json(l, s), true), ov);
            return 0;
        }

        if (hole_cmd->parsed()) {
            const PointSet s = load_points_file(hole_io.in_path);
            const std::optional<Hole> h = find_5hole(s);
            if (!h) {
                nlohmann::json payload;
                payload["type"] = "hole";
                payload["found"] = false;
                emit(hole_io, s, report_document("hole", std::nullopt, s, payload, true),
                     SvgOverlays{});
                return 1;
            }
            emit(hole_io, s, report_document("hole", std::nullopt, s, hole_to_json(*h, s), true),
                 SvgOverlays{{cycle_of(*h)}, {}});
            return 0;
        }

        if (holes_cmd->parsed()) {
            const PointSet s = load_points_file(holes_io.in_path);
            const std::vector<Hole> all = enumerate_k_holes(s, holes_k);
            SvgOverlays ov;
            for (const Hole& h : all) ov.polygons.push_back(cycle_of(h));
            emit(holes_io, s,
                 report_document("holes", std::nullopt, s, hole_list_to_json(all, holes_k, s),
                                 true),
                 ov);
            return all.empty() ? 1 : 0;
        }

        if (pair_cmd->parsed()) {
            const PointSet s = load_points_file(pair_io.in_path);
            const std::optional<DisjointPair> pr = find_two_disjoint_5holes(s);
            if (!pr) {
                nlohmann::json payload;
                payload["type"] = "disjoint_pair";
                payload["found"] = false;
                emit(pair_io, s, report_document("pair", std::nullopt, s, payload, true),
                     SvgOverlays{});
                return 1;
            }
            const bool ok = verify_pair(*pr, s).ok;
            emit(pair_io, s, report_document("pair", std::nullopt, s, pair_to_json(*pr, s), ok),
                 SvgOverlays{{cycle_of(pr->a), cycle_of(pr->b)}, {{pr->sep_p, pr->sep_q}}});
            return 0;
        }

        if (cls_cmd->parsed()) {
            const PointSet s = load_points_file(cls_io.in_path);
            const NinePointClassification cls = classify_9points(s);
            SvgOverlays ov;
            if (cls.has_five_hole()) ov.polygons.push_back(cycle_of(*cls.hole));
            emit(cls_io, s,
                 report_document("classify9", std::nullopt, s, classification_to_json(cls, s),
                                 true),
                 ov);
            return 0;
        }

        if (part_cmd->parsed()) {
            const PointSet s = load_points_file(part_io.in_path);
            const SeparablePartition part = separable_partition(s, part_m);
            const bool ok = verify_partition(part, s).ok;
            SvgOverlays ov;
            for (const auto* side : {&part.s1, &part.s2, &part.s3}) {
                const std::vector<Point> hc = hull_cycle(*side);
                if (hc.size() >= 3) ov.polygons.push_back(hc);
            }
            ov.polygons.push_back(cycle_of(part.hole));
            emit(part_io, s,
                 report_document("partition", std::nullopt, s, partition_to_json(part, s), ok),
                 ov);
            return 0;
        }

        if (wit_cmd->parsed()) {
            const PointSet s = load_points_file(wit_io.in_path);
            const WitnessReport rep =
                wit_method == "strip" ? witness_5n_47(s) : witness_doubling(s);
            SvgOverlays ov;
            for (const Hole& h : rep.holes) ov.polygons.push_back(cycle_of(h));
            emit(wit_io, s,
                 report_document("witness", std::nullopt, s, witness_to_json(rep, s),
                                 rep.verified),
                 ov);
            return 0;
        }

        if (ver_cmd->parsed()) {
            const PointSet s = load_points_file(ver_io.in_path);
            const nlohmann::json doc = nlohmann::json::parse(read_file(ver_report));
            const VerifyResult res = verify_report_document(doc, s);
            nlohmann::json payload;
            payload["type"] = "verification";
            payload["ok"] = res.ok;
            payload["reasons"] = res.reasons;
            emit(ver_io, s, report_document("verify", std::nullopt, s, payload, res.ok),
                 SvgOverlays{});
            return res.ok ? 0 : 1;
        }
    } catch (const ContractViolation& cv) {
        std::fprintf(stderr, "contract violation: %s\n", cv.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: malformed JSON: %s\n", e.what());
        return 2;
    }
    return 0;
}
