#include "sb/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sb::kernels {

namespace {
// Below these sizes the parallel variants just call the serial code;
// thread startup would dominate.
constexpr std::size_t kMinParallelSamples = 4096;
constexpr std::size_t kMinParallelOrder = 64;
}  // namespace

PowerSums centered_power_sums_serial(std::span<const double> values,
                                     std::span<const double> weights, double center) {
    PowerSums s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - center;
        const double d2 = d * d;
        const double w = weights[i];
        s.s1 += w * d;
        s.s2 += w * d2;
        s.s3 += w * d2 * d;
        s.s4 += w * d2 * d2;
    }
    return s;
}

PowerSums centered_power_sums_omp(std::span<const double> values,
                                  std::span<const double> weights, double center) {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for reduction(+ : s1, s2, s3, s4) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double d = values[static_cast<std::size_t>(i)] - center;
        const double d2 = d * d;
        const double w = weights[static_cast<std::size_t>(i)];
        s1 += w * d;
        s2 += w * d2;
        s3 += w * d2 * d;
        s4 += w * d2 * d2;
    }
    return PowerSums{s1, s2, s3, s4};
}

PowerSums centered_power_sums(std::span<const double> values,
                              std::span<const double> weights, double center) {
#ifdef _OPENMP
    if (values.size() >= kMinParallelSamples)
        return centered_power_sums_omp(values, weights, center);
#endif
    return centered_power_sums_serial(values, weights, center);
}

PowerSums raw_power_sums_serial(std::span<const double> values,
                                std::span<const double> weights) {
    return centered_power_sums_serial(values, weights, 0.0);
}

PowerSums raw_power_sums_omp(std::span<const double> values,
                             std::span<const double> weights) {
    return centered_power_sums_omp(values, weights, 0.0);
}

PowerSums raw_power_sums(std::span<const double> values, std::span<const double> weights) {
    return centered_power_sums(values, weights, 0.0);
}

void matmul_serial(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx* row = out + i * n;
        for (std::size_t j = 0; j < n; ++j) row[j] = cplx{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
        }
    }
}

void matmul_omp(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) {
        cplx* row = out + static_cast<std::size_t>(i) * n;
        for (std::size_t j = 0; j < n; ++j) row[j] = cplx{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[static_cast<std::size_t>(i) * n + k];
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
        }
    }
}

void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
#ifdef _OPENMP
    if (n >= kMinParallelOrder) {
        matmul_omp(a, b, out, n);
        return;
    }
#endif
    matmul_serial(a, b, out, n);
}

cplx trace_of_product_serial(const cplx* a, const cplx* b, std::size_t n) {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) t += a[i * n + k] * b[k * n + i];
    return t;
}

cplx trace_of_product_omp(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for reduction(+ : re, im) schedule(static)
    for (std::ptrdiff_t i = 0; i < nn; ++i) {
        cplx t{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k)
            t += a[static_cast<std::size_t>(i) * n + k] * b[k * n + static_cast<std::size_t>(i)];
        re += t.real();
        im += t.imag();
    }
    return cplx{re, im};
}

cplx trace_of_product(const cplx* a, const cplx* b, std::size_t n) {
#ifdef _OPENMP
    if (n >= kMinParallelOrder) return trace_of_product_omp(a, b, n);
#endif
    return trace_of_product_serial(a, b, n);
}

}  // namespace sb::kernels
