// Benchmark of the batch kernels: serial reference path vs the OpenMP
// path.  The two must agree bit for bit (each iteration writes only its
// own slot; reductions happen serially), so the table also prints the
// max absolute difference as a sanity column.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "kpmn/families.hpp"
#include "kpmn/params.hpp"
#include "kpmn/parallel.hpp"
#include "kpmn/quadrature.hpp"
#include "kpmn/verify.hpp"

using namespace kpmn;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

void row(const char* name, double serial_ms, double parallel_ms, double max_diff) {
    std::printf("%-28s %10.2f ms %10.2f ms   x%-6.2f   max|diff|=%.1e\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms, max_diff);
}

} // namespace

int main() {
    std::printf("threads: %d (OpenMP %s)\n\n", hardware_threads(),
                openmp_enabled() ? "on" : "off");
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    const auto eq = make_equation(1.0, 1.0, 1, Rational(2), Rational(2), 2);
    const WaveParams wk{{1.0}, 1.75};
    const Profile cosine = make_profile(FamilyId::CosCompacton, eq, wk);

    { // profile sampling
        const int N = 2'000'000;
        std::vector<double> xs(N), us(N), up(N);
        for (int i = 0; i < N; ++i)
            xs[i] = -1.1 * cosine.L + 2.2 * cosine.L * i / (N - 1);
        const double ts = time_best_of(
            3, [&] { sample_profile(cosine, xs, us, Execution::serial); });
        const double tp = time_best_of(
            3, [&] { sample_profile(cosine, xs, up, Execution::parallel); });
        double diff = 0.0;
        for (int i = 0; i < N; ++i) diff = std::max(diff, std::abs(us[i] - up[i]));
        row("sample_profile (2M pts)", ts, tp, diff);
    }

    { // quadrature inversion
        const ReducedConstants rc = reduced_constants(eq, wk, 0.0, 0.0);
        const PotentialSpec spec{rc, eq.m, eq.n};
        NumericProfile ns, np;
        const double ts =
            time_best_of(1, [&] { ns = invert_profile(spec, 257, Execution::serial); });
        const double tp =
            time_best_of(1, [&] { np = invert_profile(spec, 257, Execution::parallel); });
        double diff = 0.0;
        for (std::size_t i = 0; i < ns.U.size(); ++i)
            diff = std::max(diff, std::abs(ns.U[i] - np.U[i]));
        row("invert_profile (257 pts)", ts, tp, diff);
    }

    { // solitary quadrature
        NumericProfile ns, np;
        const double ts = time_best_of(1, [&] {
            ns = solitary_profile(2.0 / 3.0, 1.0, Rational(2), Rational(1), 10.0, 129,
                                  Execution::serial);
        });
        const double tp = time_best_of(1, [&] {
            np = solitary_profile(2.0 / 3.0, 1.0, Rational(2), Rational(1), 10.0, 129,
                                  Execution::parallel);
        });
        double diff = 0.0;
        for (std::size_t i = 0; i < ns.U.size(); ++i)
            diff = std::max(diff, std::abs(ns.U[i] - np.U[i]));
        row("solitary_profile (129 pts)", ts, tp, diff);
    }

    { // weak-form batch
        const auto tests = random_test_functions(cosine, 48, 0);
        double rs = 0.0, rp = 0.0;
        const double ts = time_best_of(1, [&] {
            rs = weak_form_residual(cosine, tests, WeakFormOrder::fourth, Execution::serial);
        });
        const double tp = time_best_of(1, [&] {
            rp = weak_form_residual(cosine, tests, WeakFormOrder::fourth,
                                    Execution::parallel);
        });
        row("weak_form batch (48 bumps)", ts, tp, std::abs(rs - rp));
    }

    return 0;
}
