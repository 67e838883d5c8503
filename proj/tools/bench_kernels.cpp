// Compares the serial reference kernels against the OpenMP variants at a few
// problem sizes. Timings only; correctness agreement is covered by the tests.

#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "sb/kernels.hpp"

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial code\n");
#endif

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    std::printf("\ncentered power sums (weighted, orders 1..4)\n");
    std::printf("%12s %12s %12s %8s\n", "n", "serial[s]", "omp[s]", "speedup");
    for (std::size_t n : {std::size_t{100000}, std::size_t{1000000}, std::size_t{10000000}}) {
        std::vector<double> x(n), w(n, 1.0 / static_cast<double>(n));
        for (auto& v : x) v = dist(rng);
        volatile double sink = 0.0;
        const double ts = time_best_of(3, [&] {
            sink = sink + sb::kernels::centered_power_sums_serial(x, w, 0.1).s4;
        });
        const double tp = time_best_of(3, [&] {
            sink = sink + sb::kernels::centered_power_sums_omp(x, w, 0.1).s4;
        });
        std::printf("%12zu %12.6f %12.6f %8.2fx\n", n, ts, tp, ts / tp);
    }

    std::printf("\ncomplex matrix product\n");
    std::printf("%12s %12s %12s %8s\n", "n", "serial[s]", "omp[s]", "speedup");
    for (std::size_t n : {std::size_t{64}, std::size_t{128}, std::size_t{256}, std::size_t{512}}) {
        std::vector<std::complex<double>> a(n * n), b(n * n), c(n * n);
        for (auto& v : a) v = {dist(rng), dist(rng)};
        for (auto& v : b) v = {dist(rng), dist(rng)};
        const double ts =
            time_best_of(3, [&] { sb::kernels::matmul_serial(a.data(), b.data(), c.data(), n); });
        const double tp =
            time_best_of(3, [&] { sb::kernels::matmul_omp(a.data(), b.data(), c.data(), n); });
        std::printf("%12zu %12.6f %12.6f %8.2fx\n", n, ts, tp, ts / tp);
    }
    return 0;
}
