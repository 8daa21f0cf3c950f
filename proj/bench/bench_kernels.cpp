// Wall-clock comparison of the serial reference implementations against the
// OpenMP-parallel ones, over representative workloads.  Both modes compute
// identical results (the test suite asserts this); here we only time them.
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symmod/exec.hpp"
#include "symmod/geometry.hpp"
#include "symmod/hilbmod.hpp"
#include "symmod/kernels.hpp"
#include "symmod/permgroup.hpp"
#include "symmod/symfunc.hpp"

using namespace symmod;

namespace {

volatile double g_sink = 0.0;  // keeps results observable so work is not elided

double time_ms(int reps, const std::function<void(Exec)>& body, Exec ex) {
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) body(ex);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void run(const std::string& name, int reps, const std::function<void(Exec)>& body) {
    body(Exec::Serial);  // warm-up, outside the timed region
    double serial = time_ms(reps, body, Exec::Serial);
    double openmp = time_ms(reps, body, Exec::OpenMP);
    std::printf("%-34s %10.2f %10.2f %9.2fx\n", name.c_str(), serial, openmp,
                openmp > 0 ? serial / openmp : 0.0);
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", max_threads());
    std::printf("%-34s %10s %10s %10s\n", "workload", "serial ms", "openmp ms", "speedup");

    {
        std::mt19937_64 eng(7);
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        std::vector<std::vector<double>> m(12, std::vector<double>(12));
        for (auto& row : m)
            for (double& x : row) x = dist(eng);
        run("permanent (double, side 12)", 50,
            [&](Exec ex) { g_sink = g_sink + permanent(m, 0.0, ex); });
    }

    run("orthogonality scan (n=5, dim 5)", 1, [&](Exec ex) {
        IrrepTable<Rat> rep = irrep_seminormal(5, Partition({3, 2}));
        g_sink = g_sink + (verify_orthogonality(rep, rep, ex).pass ? 1.0 : 0.0);
    });

    run("symmetrized kernel (n=4, d=6)", 3, [&](Exec ex) {
        g_sink = g_sink + static_cast<double>(kernel_Gn_monomial(Rat(2), 4, 6, ex).terms.size());
    });

    run("determinantal kernel (n=4, d=7)", 3, [&](Exec ex) {
        g_sink = g_sink +
                 static_cast<double>(kernel_Bergman_Gn(Rat(5) / 2, 4, 7, ex).terms.size());
    });

    run("permanent crosscheck (n=4, d=6)", 1, [&](Exec ex) {
        g_sink = g_sink + (crosscheck_permanent(Rat(2), 4, 6, ex).match ? 1.0 : 0.0);
    });

    {
        TruncatedModule mod = build_module(3, 4, Rat(2));
        run("projection block algebra (n=3, d=4)", 1, [&](Exec ex) {
            g_sink = g_sink +
                     (verify_projection_algebra(mod, IrrepForm::Seminormal, 1e-10, ex).pass
                          ? 1.0
                          : 0.0);
        });
    }

    {
        TruncatedModule mod = build_module(3, 7, Rat(1));
        std::vector<Rat> w = {Rat(1, 2), Rat(1, 3), Rat(-1, 4)};
        run("joint-kernel Gram rank (n=3, d=7)", 1, [&](Exec ex) {
            g_sink = g_sink + joint_kernel(mod, w, ex).rank;
        });
    }

    {
        std::vector<std::vector<std::complex<double>>> pts = {
            {{0.20, 0.10}, {-0.15, 0.05}}, {{0.05, -0.30}, {0.25, 0.00}}};
        run("curvature comparison (n=2, d=12)", 1, [&](Exec ex) {
            g_sink = g_sink + compare_curvatures(2, Rat(1), pts, 1e-3, 12, ex).max_diff;
        });
    }

    std::printf("\nchecksum (ignore): %g\n", g_sink);
    return 0;
}
