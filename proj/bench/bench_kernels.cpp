// Benchmark: OpenMP kernels against their serial references.
//   - k-hole enumeration oracle (subset scan)
//   - disjoint-pair separating-line scan
// Results are checked for equality before timings are reported.

#include <chrono>
#include <cstdio>
#include <string>

#include "pentahole/io.hpp"
#include "pentahole/pentagons.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pentahole;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double best_ms(Fn&& fn, int reps = 3) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        fn();
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif

    std::printf("\n%-34s %10s %10s %8s\n", "kernel", "serial ms", "parallel", "speedup");

    for (const int n : {24, 32, 40, 47}) {
        const PointSet s = random_general_position(n, 1234 + static_cast<std::uint64_t>(n));
        std::vector<Hole> ser, par;
        const double t_ser = best_ms([&] { ser = enumerate_k_holes_serial(s, 5); });
        const double t_par = best_ms([&] { par = enumerate_k_holes_parallel(s, 5); });
        if (ser.size() != par.size() || !std::equal(ser.begin(), ser.end(), par.begin())) {
            std::printf("enumeration mismatch at n=%d\n", n);
            return 1;
        }
        const std::string label =
            "enumerate 5-holes  n=" + std::to_string(n) + " (" + std::to_string(ser.size()) + ")";
        std::printf("%-34s %10.2f %10.2f %7.2fx\n", label.c_str(), t_ser, t_par, t_ser / t_par);
    }

    for (const int n : {19, 25, 31}) {
        const PointSet s = random_general_position(n, 5678 + static_cast<std::uint64_t>(n));
        PairSearchOptions serial_opt{false, false};   // complete line scan only
        PairSearchOptions parallel_opt{true, false};
        std::optional<DisjointPair> a, b;
        const double t_ser = best_ms([&] { a = find_two_disjoint_5holes(s, serial_opt); });
        const double t_par = best_ms([&] { b = find_two_disjoint_5holes(s, parallel_opt); });
        if (a.has_value() != b.has_value() ||
            (a && !(a->a.polygon.vertices() == b->a.polygon.vertices() &&
                    a->b.polygon.vertices() == b->b.polygon.vertices()))) {
            std::printf("pair-scan mismatch at n=%d\n", n);
            return 1;
        }
        const std::string label = "pair line-scan     n=" + std::to_string(n);
        std::printf("%-34s %10.2f %10.2f %7.2fx\n", label.c_str(), t_ser, t_par, t_ser / t_par);
    }
    return 0;
}
