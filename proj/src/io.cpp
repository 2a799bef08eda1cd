#include "pentahole/io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace pentahole {

namespace {

struct ParsedLine {
    Point p;
    int line; // 1-based
};

bool parse_int(std::string_view tok, std::int64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

PointSet parse_points(std::string_view text) {
    std::vector<ParsedLine> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string_view::npos || line[b] == '#') continue;
        std::istringstream ss{std::string(line)};
        std::string tx, ty, extra;
        ss >> tx >> ty;
        std::int64_t x, y;
        if (tx.empty() || ty.empty() || !parse_int(tx, x) || !parse_int(ty, y) || (ss >> extra))
            fail(Errc::ParseError, "expected two integers on line " + std::to_string(line_no),
                 {line_no});
        rows.push_back({Point{x, y}, line_no});
    }
    std::vector<Point> pts;
    pts.reserve(rows.size());
    for (const ParsedLine& r : rows) pts.push_back(r.p);
    try {
        return validate_general_position(pts);
    } catch (const Error& e) {
        // Re-attribute point indices to source lines.
        if (e.code() == Errc::DuplicatePoint || e.code() == Errc::CollinearTriple ||
            e.code() == Errc::CoordinateOverflow) {
            std::vector<long long> lines;
            std::string where;
            for (long long idx : e.args()) {
                const int ln = rows[static_cast<std::size_t>(idx)].line;
                lines.push_back(ln);
                if (!where.empty()) where += ", ";
                where += std::to_string(ln);
            }
            fail(e.code(), std::string(e.what()) + " (source line " + where + ")", lines);
        }
        throw;
    }
}

std::string emit_points(const PointSet& s) {
    std::string out;
    for (const Point& p : s.points()) {
        out += std::to_string(p.x);
        out += ' ';
        out += std::to_string(p.y);
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoError, "cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(Errc::IoError, "short write to " + path);
}

PointSet load_points_file(const std::string& path) { return parse_points(read_file(path)); }

namespace {

// Unbiased draw from [0, n); std::uniform_int_distribution is
// implementation-defined, which would break byte-stable outputs.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

} // namespace

PointSet random_general_position(int n, std::uint64_t seed, std::int64_t coord_max) {
    if (n < 1) fail(Errc::PreconditionViolated, "n must be positive");
    if (coord_max < 1 || coord_max > kCoordMax)
        fail(Errc::PreconditionViolated, "coord_max must be in [1, 10^6]");
    const std::uint64_t side = static_cast<std::uint64_t>(2 * coord_max + 1);
    if (side * side < static_cast<std::uint64_t>(n))
        fail(Errc::Unsatisfiable, "grid has fewer cells than requested points");

    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    // On tiny grids a general-position placement may not exist at all; the
    // attempt cap turns that into a deterministic failure.
    const std::uint64_t max_attempts = 200000ull + 2000ull * static_cast<std::uint64_t>(n);
    std::uint64_t attempts = 0;
    while (pts.size() < static_cast<std::size_t>(n)) {
        if (++attempts > max_attempts)
            fail(Errc::Unsatisfiable, "grid too constrained for a general-position placement");
        const Point cand{static_cast<std::int64_t>(bounded(rng, side)) - coord_max,
                         static_cast<std::int64_t>(bounded(rng, side)) - coord_max};
        bool ok = true;
        for (const Point& p : pts) {
            if (p == cand) {
                ok = false;
                break;
            }
        }
        for (std::size_t i = 0; ok && i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (orientation(pts[i], pts[j], cand) == Orient::Collinear) {
                    ok = false;
                    break;
                }
        if (ok) pts.push_back(cand);
    }
    return PointSet::unchecked(std::move(pts));
}

} // namespace pentahole
