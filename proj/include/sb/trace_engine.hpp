#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sb/errors.hpp"

namespace sb {

/// Dense n x n complex matrix, row-major, immutable after construction.
class SquareMatrix {
public:
    using cplx = std::complex<double>;

    explicit SquareMatrix(int n);
    SquareMatrix(int n, std::vector<cplx> entries);

    static SquareMatrix identity(int n);
    static SquareMatrix from_real(int n, std::span<const double> entries);
    static SquareMatrix diagonal(std::span<const double> values);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] const cplx& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    [[nodiscard]] cplx& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    [[nodiscard]] const cplx* data() const { return e_.data(); }

    [[nodiscard]] cplx trace() const;
    [[nodiscard]] double max_abs() const;
    [[nodiscard]] double frobenius_norm() const;
    [[nodiscard]] bool is_hermitian(double rel_tol = 1e-10) const;
    [[nodiscard]] bool has_imaginary_part() const;

    [[nodiscard]] SquareMatrix multiply(const SquareMatrix& other) const;
    [[nodiscard]] SquareMatrix shifted(double c) const;  // this + c*I

private:
    int n_;
    std::vector<cplx> e_;
};

/// Trace statistics of the centered matrix B = A - (trA/n) I.
struct CenteredTraces {
    int n = 0;
    double trA = 0.0;
    double trB2 = 0.0;
    double trB3 = 0.0;
    double trB4 = 0.0;
};

/// Computes tr B^2, tr B^3, tr B^4 by explicit matrix products (B^2, then
/// B^2*B and B^2*B^2). Imaginary parts must be negligible relative to the
/// matrix scale; otherwise NonNegligibleImaginaryTrace is thrown.
CenteredTraces centered_traces(const SquareMatrix& A);

/// Positive unital linear functional realized as phi(X) = tr(W X) with W a
/// positive semidefinite Hermitian density weight of unit trace.
class DensityFunctional {
public:
    explicit DensityFunctional(SquareMatrix weight);

    static DensityFunctional trace_mean(int n);  // W = I/n

    [[nodiscard]] const SquareMatrix& weight() const { return W_; }
    [[nodiscard]] double evaluate(const SquareMatrix& X) const;  // tr(W X), real part

private:
    SquareMatrix W_;
};

struct FunctionalMoments {
    double phiA = 0.0;
    double phiB2 = 0.0;
    double phiB3 = 0.0;
    double phiB4 = 0.0;
};

/// phi evaluated on A and powers of B = A - phi(A) I. A must be Hermitian.
FunctionalMoments functional_moments(const SquareMatrix& A, const DensityFunctional& phi);

/// All eigenvalues of a Hermitian matrix by cyclic Jacobi iteration, sorted
/// ascending. Complex Hermitian input is handled through the real symmetric
/// 2n x 2n embedding. Verification path only.
std::vector<double> eigen_oracle(const SquareMatrix& A);

/// Trace statistics computed from a known spectrum.
CenteredTraces spectrum_to_traces(std::span<const double> eigenvalues);

}  // namespace sb
