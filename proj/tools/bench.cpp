// Compares the serial and OpenMP paths of the table-level drivers on the
// same workloads and checks that both produce identical results.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gradedmf/hom.hpp"
#include "gradedmf/quiver.hpp"
#include "gradedmf/selftest.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled in this build\n");
#endif
    std::printf("%-34s %10s %10s %8s\n", "workload", "serial[s]", "parallel[s]", "speedup");

    bool all_match = true;
    auto run = [&](const char* name, auto&& serial_fn, auto&& parallel_fn) {
        auto t0 = Clock::now();
        auto a = serial_fn();
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto b = parallel_fn();
        double tp = seconds_since(t0);
        bool same = (a == b);
        all_match = all_match && same;
        std::printf("%-34s %10.3f %10.3f %7.2fx%s\n", name, ts, tp, tp > 0 ? ts / tp : 0.0,
                    same ? "" : "  RESULTS DIFFER");
    };

    run(
        "serre duality grid h=9 range=2",
        [] { auto r = gmf::verify_serre_duality(9, 2, false); return r.pass(); },
        [] { auto r = gmf::verify_serre_duality(9, 2, true); return r.pass(); });

    run(
        "bridgeland check h=7 window=2",
        [] { auto r = gmf::check_bridgeland(7, 2, 200, 0, false); return r.failures; },
        [] { auto r = gmf::check_bridgeland(7, 2, 200, 0, true); return r.failures; });

    run(
        "equivalence evidence h=12",
        [] { auto r = gmf::equivalence_report(12, false); return r.mf_table; },
        [] { auto r = gmf::equivalence_report(12, true); return r.mf_table; });

    std::printf("result parity: %s\n", all_match ? "identical" : "MISMATCH");
    return all_match ? 0 : 1;
}
