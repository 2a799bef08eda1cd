#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "pentahole/io.hpp"
#include "pentahole/report.hpp"
#include "pentahole/svg.hpp"

using namespace pentahole;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(PENTAHOLE_CLI) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string tmp_path(const std::string& name) { return "/tmp/pentahole_test_" + name; }

} // namespace

TEST_CASE("parse_points basics and source-line attribution") {
    const PointSet s = parse_points("0 0\n4 0\n0 4\n");
    CHECK(s.size() == 3);

    try {
        (void)parse_points("0 0\n# c\n1 1\n2 2\n0 5\n");
        FAIL("expected CollinearTriple");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CollinearTriple);
        CHECK(e.args() == std::vector<long long>{1, 3, 4});
    }

    try {
        (void)parse_points("0 zero\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(e.args() == std::vector<long long>{1});
    }
    CHECK_THROWS_AS((void)parse_points("1 2 3\n"), Error);
}

TEST_CASE("emit/parse round trip") {
    for (int t = 0; t < 25; ++t) {
        const PointSet s = random_general_position(20, 160000 + static_cast<std::uint64_t>(t));
        const PointSet back = parse_points(emit_points(s));
        CHECK(back.points() == s.points());
        CHECK(back.digest() == s.digest());
    }
}

TEST_CASE("random_general_position") {
    const PointSet a = random_general_position(10, 1);
    const PointSet b = random_general_position(10, 1);
    CHECK(a.points() == b.points());
    const PointSet c = random_general_position(10, 2);
    CHECK(a.points() != c.points());

    // all outputs really are in general position
    const PointSet d = random_general_position(47, 7, 50);
    CHECK_NOTHROW((void)validate_general_position(d.points()));

    // the 3x3 grid admits up to 6 points with no three collinear
    const PointSet five_on_grid = random_general_position(5, 1, 1);
    CHECK_NOTHROW((void)validate_general_position(five_on_grid.points()));
    // but never 7, which the attempt cap converts into a clean failure
    try {
        (void)random_general_position(7, 1, 1);
        FAIL("expected Unsatisfiable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Unsatisfiable);
    }
    CHECK_THROWS_AS((void)random_general_position(0, 1), Error);
}

TEST_CASE("generated 47-point sets have a 5-hole in every 10-point window") {
    const PointSet s = random_general_position(47, 7);
    const std::vector<Point>& pts = s.points();
    for (std::size_t w = 0; w + 10 <= pts.size(); w += 4) {
        const PointSet win =
            PointSet::unchecked(std::vector<Point>(pts.begin() + static_cast<std::ptrdiff_t>(w),
                                                   pts.begin() + static_cast<std::ptrdiff_t>(w) + 10));
        CHECK(find_5hole(win).has_value());
    }
}

TEST_CASE("oracle budget respects the environment override") {
    const std::uint64_t before = default_oracle_budget();
    CHECK(before == 100000000ull);
    setenv("PENTAHOLE_ORACLE_BUDGET", "12345", 1);
    CHECK(default_oracle_budget() == 12345ull);
    unsetenv("PENTAHOLE_ORACLE_BUDGET");
    CHECK(default_oracle_budget() == before);
}

TEST_CASE("render_svg_file reports unwritable paths") {
    const PointSet s = random_general_position(5, 9);
    try {
        render_svg_file(s, SvgOverlays{}, "/nonexistent_dir/x.svg");
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IoError);
    }
}

TEST_CASE("report documents carry agreeing indices and coordinates") {
    const PointSet s = random_general_position(19, 9001);
    const std::optional<Hole> h = find_5hole(s);
    REQUIRE(h.has_value());
    const nlohmann::json doc =
        report_document("hole", 9001, s, hole_to_json(*h, s), true);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["seed"] == 9001);
    CHECK(doc["input_digest"] == s.digest_hex());
    CHECK(verify_report_document(doc, s).ok);

    // tamper: shift one coordinate
    nlohmann::json bad = doc;
    bad["payload"]["vertices"][0]["x"] =
        bad["payload"]["vertices"][0]["x"].get<std::int64_t>() + 1;
    const VerifyResult v = verify_report_document(bad, s);
    CHECK_FALSE(v.ok);
    REQUIRE_FALSE(v.reasons.empty());

    // same bytes twice
    CHECK(dump_report(doc) == dump_report(doc));
}

TEST_CASE("witness report JSON round trip re-verifies") {
    const PointSet s = random_general_position(47, 4242);
    const WitnessReport w = witness_5n_47(s);
    const nlohmann::json doc =
        report_document("witness", std::nullopt, s, witness_to_json(w, s), w.verified);
    CHECK(verify_report_document(doc, s).ok);

    nlohmann::json bad = doc;
    bad["payload"]["holes"][0]["vertices"][1]["x"] = 999999;
    CHECK_FALSE(verify_report_document(bad, s).ok);
}

TEST_CASE("svg rendering is deterministic and complete") {
    const PointSet s = random_general_position(19, 31337);
    const std::optional<Hole> h = find_5hole(s);
    REQUIRE(h.has_value());
    SvgOverlays ov;
    ov.polygons.push_back(h->polygon.vertices());
    ov.lines.push_back({s[0], s[1]});
    const std::string svg = render_svg(s, ov);
    CHECK(svg == render_svg(s, ov));
    std::size_t circles = 0;
    for (std::size_t pos = 0; (pos = svg.find("<circle", pos)) != std::string::npos; ++pos)
        ++circles;
    CHECK(circles == s.size());
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("cli: generate, analyze, verify round trip") {
    const std::string pts = tmp_path("pts.txt");
    const std::string rep = tmp_path("rep.json");
    const std::string svg = tmp_path("fig.svg");

    REQUIRE(run_cli("gen -n 47 --seed 7 --out " + pts) == 0);
    CHECK(run_cli("hull --in " + pts + " --json " + rep) == 0);
    CHECK(run_cli("layers --in " + pts + " --json " + rep) == 0);
    CHECK(run_cli("hole --in " + pts + " --json " + rep + " --svg " + svg) == 0);
    CHECK(run_cli("pair --in " + pts + " --json " + rep) == 0);
    CHECK(run_cli("partition -m 19 --in " + pts + " --json " + rep) == 0);
    CHECK(run_cli("witness --method strip --in " + pts + " --json " + rep) == 0);
    CHECK(run_cli("verify --report " + rep + " --in " + pts) == 0);
    CHECK(run_cli("witness --method doubling --in " + pts + " --json " + rep) == 0);
    CHECK(run_cli("verify --report " + rep + " --in " + pts) == 0);

    // byte-stable outputs for identical seeds and flags
    const std::string pts2 = tmp_path("pts2.txt");
    REQUIRE(run_cli("gen -n 47 --seed 7 --out " + pts2) == 0);
    CHECK(read_file(pts) == read_file(pts2));
    const std::string rep2 = tmp_path("rep2.json");
    REQUIRE(run_cli("witness --method doubling --in " + pts2 + " --json " + rep2) == 0);
    CHECK(read_file(rep) == read_file(rep2));
}

TEST_CASE("cli: exit codes distinguish negatives and bad input") {
    const std::string nine = std::string(PENTAHOLE_DATA_DIR) + "/no5hole_L333.txt";
    CHECK(run_cli("pair --in " + nine) == 1);      // honest negative
    CHECK(run_cli("hole --in " + nine) == 1);      // no hole exists
    CHECK(run_cli("classify9 --in " + nine) == 0); // classification succeeds

    const std::string bad = tmp_path("bad.txt");
    std::ofstream(bad) << "0 0\n1 1\n2 2\n0 5\n"; // collinear
    CHECK(run_cli("hole --in " + bad) == 2);
    CHECK(run_cli("hole --in /nonexistent/file.txt") == 2);
    CHECK(run_cli("witness --method doubling --in " + bad) == 2);

    const std::string pts20 = tmp_path("pts20.txt");
    REQUIRE(run_cli("gen -n 20 --seed 1 --out " + pts20) == 0);
    CHECK(run_cli("witness --method doubling --in " + pts20) == 2); // not a doubling size
}
