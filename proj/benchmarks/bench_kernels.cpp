// Timing comparison of the OpenMP kernels against the serial reference.

#include "pilq/graph.hpp"
#include "pilq/oracle.hpp"
#include "pilq/statevector.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   omp %9.2f ms   speedup %5.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 20;
    std::printf("kernel benchmark, n = %d qubits", n);
#ifdef _OPENMP
    std::printf(", %d threads\n", omp_get_max_threads());
#else
    std::printf(", OpenMP disabled\n");
#endif

    const pilq::Graph g = pilq::generate_random(n, 0.5, true, 1);
    std::printf("graph: %zu edges\n\n", g.edges.size());

    pilq::CutTable table;
    report("build_cut_table",
           time_ms([&] { table = pilq::serial::build_cut_table(g); }),
           time_ms([&] { table = pilq::build_cut_table(g); }));

    pilq::StateVector s = pilq::init_plus_state(n);
    report("apply_cost_phase",
           time_ms([&] { pilq::serial::apply_cost_phase(s, table, 0.37); }),
           time_ms([&] { pilq::apply_cost_phase(s, table, 0.37); }));

    report("apply_mixer",
           time_ms([&] { pilq::serial::apply_mixer(s, 0.21); }),
           time_ms([&] { pilq::apply_mixer(s, 0.21); }));

    volatile double sink = 0.0;
    report("expectation",
           time_ms([&] { sink = pilq::serial::expectation(s, table); }),
           time_ms([&] { sink = pilq::expectation(s, table); }));
    (void)sink;

    report("max_cut_bruteforce",
           time_ms([&] { pilq::serial::max_cut_bruteforce(g); }, 1),
           time_ms([&] { pilq::max_cut_bruteforce(g); }, 1));

    return 0;
}
