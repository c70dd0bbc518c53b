// Compares the serial reference and OpenMP paths of the batch kernels:
// basin probing, parameter sweeps, and the sign-similarity sweep.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bisis/sampling.hpp"
#include "bisis/scenarios.hpp"
#include "bisis/stability.hpp"

using namespace bisis;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-22s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif

    const ScenarioSpec* fig2 = find_scenario("fig2");
    const auto p10 = find_equilibrium(fig2->params, "p_10");

    BasinOptions bopt;
    bopt.t_end = 100.0;
    double frac_s = 0, frac_p = 0;
    const double basin_serial = time_ms(
        [&] { frac_s = basin_probe(fig2->params, p10->point, 32, 7, bopt, Exec::Serial); });
    const double basin_parallel = time_ms(
        [&] { frac_p = basin_probe(fig2->params, p10->point, 32, 7, bopt, Exec::Parallel); });
    report("basin_probe(n=32)", basin_serial, basin_parallel);
    if (frac_s != frac_p) {
        std::printf("MISMATCH: serial fraction %f != parallel %f\n", frac_s, frac_p);
        return 1;
    }

    SweepSpec sspec;
    sspec.base = fig2->params;
    sspec.axes = {{"q", 0.05, 0.95, 128}, {"cD", 0.05, 2.0, 128}};
    SweepGrid gs, gp;
    const double sweep_serial = time_ms([&] { gs = sweep(sspec, Exec::Serial); });
    const double sweep_parallel = time_ms([&] { gp = sweep(sspec, Exec::Parallel); });
    report("sweep(128x128)", sweep_serial, sweep_parallel);
    for (std::size_t i = 0; i < gs.cells.size(); ++i)
        if (gs.cells[i].stable != gp.cells[i].stable || gs.cells[i].exists != gp.cells[i].exists) {
            std::printf("MISMATCH: sweep cell %zu differs between paths\n", i);
            return 1;
        }

    const auto samples = sample_interior_batch(11, 4000);
    SignatureSweep ms, mp;
    const double mono_serial =
        time_ms([&] { ms = monotonicity_check(fig2->params, samples, Exec::Serial); });
    const double mono_parallel =
        time_ms([&] { mp = monotonicity_check(fig2->params, samples, Exec::Parallel); });
    report("monotone(4000 pts)", mono_serial, mono_parallel);
    if (ms.n_ok != mp.n_ok) {
        std::printf("MISMATCH: signature counts differ between paths\n");
        return 1;
    }

    std::printf("all parallel results match the serial reference\n");
    return 0;
}
