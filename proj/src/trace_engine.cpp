#include "sb/trace_engine.hpp"

#include <algorithm>
#include <cmath>

#include "sb/kernels.hpp"

namespace sb {

SquareMatrix::SquareMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw InputError("matrix order must be >= 1");
}

SquareMatrix::SquareMatrix(int n, std::vector<cplx> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1) throw InputError("matrix order must be >= 1");
    if (e_.size() != static_cast<std::size_t>(n) * n)
        throw InputError("entry count does not match matrix order");
    for (const auto& z : e_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InputError("matrix entries must be finite");
}

SquareMatrix SquareMatrix::identity(int n) {
    SquareMatrix I(n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1.0;
    return I;
}

SquareMatrix SquareMatrix::from_real(int n, std::span<const double> entries) {
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw InputError("entry count does not match matrix order");
    std::vector<cplx> e(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) e[i] = entries[i];
    return SquareMatrix(n, std::move(e));
}

SquareMatrix SquareMatrix::diagonal(std::span<const double> values) {
    SquareMatrix D(static_cast<int>(values.size()));
    for (int i = 0; i < D.n_; ++i) D.at(i, i) = values[static_cast<std::size_t>(i)];
    return D;
}

SquareMatrix::cplx SquareMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : e_) m = std::max(m, std::abs(z));
    return m;
}

double SquareMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : e_) s += std::norm(z);
    return std::sqrt(s);
}

bool SquareMatrix::is_hermitian(double rel_tol) const {
    const double tol = rel_tol * std::max(1.0, max_abs());
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

bool SquareMatrix::has_imaginary_part() const {
    for (const auto& z : e_)
        if (z.imag() != 0.0) return true;
    return false;
}

SquareMatrix SquareMatrix::multiply(const SquareMatrix& other) const {
    if (other.n_ != n_) throw InputError("matrix order mismatch");
    SquareMatrix out(n_);
    kernels::matmul(e_.data(), other.e_.data(), out.e_.data(), static_cast<std::size_t>(n_));
    return out;
}

SquareMatrix SquareMatrix::shifted(double c) const {
    SquareMatrix out = *this;
    for (int i = 0; i < n_; ++i) out.at(i, i) += c;
    return out;
}

CenteredTraces centered_traces(const SquareMatrix& A) {
    const int n = A.order();
    const auto trA = A.trace();
    const double scale = std::max(1.0, A.frobenius_norm());
    if (std::abs(trA.imag()) > 1e-9 * scale)
        throw NonNegligibleImaginaryTrace("trace of A has a non-negligible imaginary part");

    const SquareMatrix B = A.shifted(-trA.real() / n);
    const SquareMatrix B2 = B.multiply(B);
    const auto n_sz = static_cast<std::size_t>(n);
    const auto t2 = B2.trace();
    const auto t3 = kernels::trace_of_product(B2.data(), B.data(), n_sz);
    const auto t4 = kernels::trace_of_product(B2.data(), B2.data(), n_sz);

    const double bscale = std::max(1.0, B.frobenius_norm());
    if (std::abs(t2.imag()) > 1e-9 * bscale * bscale ||
        std::abs(t3.imag()) > 1e-9 * bscale * bscale * bscale ||
        std::abs(t4.imag()) > 1e-9 * bscale * bscale * bscale * bscale)
        throw NonNegligibleImaginaryTrace("centered trace power has a non-negligible imaginary part");

    CenteredTraces t;
    t.n = n;
    t.trA = trA.real();
    t.trB2 = t2.real();
    t.trB3 = t3.real();
    t.trB4 = t4.real();
    return t;
}

DensityFunctional::DensityFunctional(SquareMatrix weight) : W_(std::move(weight)) {
    if (!W_.is_hermitian(1e-10)) throw InvalidFunctional("density weight must be Hermitian");
    const auto tr = W_.trace();
    if (std::abs(tr.real() - 1.0) > 1e-10 || std::abs(tr.imag()) > 1e-10)
        throw InvalidFunctional("density weight must have unit trace");
    const auto eigs = eigen_oracle(W_);
    const double tol = 1e-10 * std::max(1.0, W_.max_abs());
    if (!eigs.empty() && eigs.front() < -tol)
        throw InvalidFunctional("density weight must be positive semidefinite");
}

DensityFunctional DensityFunctional::trace_mean(int n) {
    SquareMatrix W(n);
    for (int i = 0; i < n; ++i) W.at(i, i) = 1.0 / n;
    return DensityFunctional(std::move(W));
}

double DensityFunctional::evaluate(const SquareMatrix& X) const {
    return kernels::trace_of_product(W_.data(), X.data(), static_cast<std::size_t>(X.order()))
        .real();
}

FunctionalMoments functional_moments(const SquareMatrix& A, const DensityFunctional& phi) {
    if (A.order() != phi.weight().order()) throw InputError("functional order mismatch");
    if (!A.is_hermitian(1e-10)) throw NotHermitian("functional moments require Hermitian input");
    FunctionalMoments fm;
    fm.phiA = phi.evaluate(A);
    const SquareMatrix B = A.shifted(-fm.phiA);
    const SquareMatrix B2 = B.multiply(B);
    fm.phiB2 = phi.evaluate(B2);
    fm.phiB3 = phi.evaluate(B2.multiply(B));
    fm.phiB4 = phi.evaluate(B2.multiply(B2));
    return fm;
}

namespace {

// Cyclic Jacobi on a dense real symmetric matrix, in place.
std::vector<double> jacobi_symmetric(std::vector<double> a, int n) {
    auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    double norm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) norm += a[idx(i, j)] * a[idx(i, j)];
    norm = std::sqrt(norm);
    const double target = 1e-12 * std::max(norm, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * a[idx(i, j)] * a[idx(i, j)];
        if (std::sqrt(off) < target) {
            std::vector<double> eigs(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) eigs[static_cast<std::size_t>(i)] = a[idx(i, i)];
            std::sort(eigs.begin(), eigs.end());
            return eigs;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[idx(p, q)];
                if (apq == 0.0) continue;
                const double app = a[idx(p, p)];
                const double aqq = a[idx(q, q)];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[idx(k, p)];
                    const double akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[idx(p, k)];
                    const double aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    throw NoConvergence("Jacobi iteration did not converge in 100 sweeps");
}

}  // namespace

std::vector<double> eigen_oracle(const SquareMatrix& A) {
    if (!A.is_hermitian(1e-10)) throw NotHermitian("eigen_oracle requires Hermitian input");
    const int n = A.order();
    if (!A.has_imaginary_part()) {
        std::vector<double> a(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a[static_cast<std::size_t>(i) * n + j] = A.at(i, j).real();
        // Symmetrize away the allowed Hermitian slack.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double v = 0.5 * (a[static_cast<std::size_t>(i) * n + j] +
                                        a[static_cast<std::size_t>(j) * n + i]);
                a[static_cast<std::size_t>(i) * n + j] = v;
                a[static_cast<std::size_t>(j) * n + i] = v;
            }
        return jacobi_symmetric(std::move(a), n);
    }
    // Real symmetric embedding [[Re, -Im], [Im, Re]]: each eigenvalue of A
    // appears twice.
    const int m = 2 * n;
    std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
    auto put = [&](int i, int j, double v) { a[static_cast<std::size_t>(i) * m + j] = v; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto z = 0.5 * (A.at(i, j) + std::conj(A.at(j, i)));
            put(i, j, z.real());
            put(i + n, j + n, z.real());
            put(i, j + n, -z.imag());
            put(i + n, j, z.imag());
        }
    const auto doubled = jacobi_symmetric(std::move(a), m);
    std::vector<double> eigs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        eigs[static_cast<std::size_t>(i)] =
            0.5 * (doubled[static_cast<std::size_t>(2 * i)] +
                   doubled[static_cast<std::size_t>(2 * i + 1)]);
    return eigs;
}

CenteredTraces spectrum_to_traces(std::span<const double> eigenvalues) {
    if (eigenvalues.empty()) throw InputError("spectrum must contain at least one eigenvalue");
    CenteredTraces t;
    t.n = static_cast<int>(eigenvalues.size());
    double sum = 0.0;
    for (double l : eigenvalues) sum += l;
    t.trA = sum;
    const double mean = sum / t.n;
    for (double l : eigenvalues) {
        const double d = l - mean;
        const double d2 = d * d;
        t.trB2 += d2;
        t.trB3 += d2 * d;
        t.trB4 += d2 * d2;
    }
    return t;
}

}  // namespace sb
