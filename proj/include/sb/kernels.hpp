#pragma once

#include <complex>
#include <cstddef>
#include <span>

// Data-parallel inner loops used by the moment and trace computations.
// Every kernel has a serial reference implementation and an OpenMP variant;
// the unsuffixed entry point dispatches on problem size. The serial versions
// are kept as the comparison baseline for tests and the benchmark target.

namespace sb::kernels {

struct PowerSums {
    double s1 = 0.0;  // sum w_i (x_i - c)
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;
};

PowerSums centered_power_sums_serial(std::span<const double> values,
                                     std::span<const double> weights, double center);
PowerSums centered_power_sums_omp(std::span<const double> values,
                                  std::span<const double> weights, double center);
PowerSums centered_power_sums(std::span<const double> values,
                              std::span<const double> weights, double center);

/// Raw weighted power sums about the origin (orders 1..4).
PowerSums raw_power_sums_serial(std::span<const double> values,
                                std::span<const double> weights);
PowerSums raw_power_sums_omp(std::span<const double> values,
                             std::span<const double> weights);
PowerSums raw_power_sums(std::span<const double> values,
                         std::span<const double> weights);

using cplx = std::complex<double>;

// Dense row-major n x n complex matrix product: out = a * b.
// out must not alias a or b.
void matmul_serial(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void matmul_omp(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n);

/// Trace of the product a * b without forming it.
cplx trace_of_product_serial(const cplx* a, const cplx* b, std::size_t n);
cplx trace_of_product_omp(const cplx* a, const cplx* b, std::size_t n);
cplx trace_of_product(const cplx* a, const cplx* b, std::size_t n);

}  // namespace sb::kernels
