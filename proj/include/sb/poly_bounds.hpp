#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sb/bound.hpp"
#include "sb/errors.hpp"

namespace sb {

/// Monic real-coefficient polynomial, coefficients ordered from x^n down to
/// the constant term.
class Polynomial {
public:
    explicit Polynomial(std::vector<double> coefficients);

    /// Expand prod (x - r_i) into monic coefficients.
    static Polynomial from_roots(std::span<const double> roots);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const double> coefficients() const { return coeffs_; }

private:
    std::vector<double> coeffs_;
};

/// Depressed (root-mean-zero) form of a polynomial; carries the recentering
/// shift and the coefficient-derived spectral moments.
struct DepressedForm {
    double shift = 0.0;  // roots of original = roots of depressed + shift
    double a2 = 0.0;
    std::optional<double> a3;
    std::optional<double> a4;
    double m2 = 0.0;
    std::optional<double> m4;
};

/// Recenter so the x^(n-1) coefficient vanishes (repeated Horner shift) and
/// extract a2..a4 plus m2, m4. Throws NotRealRootFeasible when the moment
/// necessary conditions for all-real roots fail.
DepressedForm depress(const Polynomial& p);

/// Coefficient-only bounds on the smallest and largest root (n >= 5).
std::pair<Bound, Bound> thm41_root_bounds(const DepressedForm& d, int n);

/// Coefficient-only lower bounds on the span (three formulas, a fourth for
/// odd n), shift-invariant.
std::vector<Bound> thm42_span_bounds(const DepressedForm& d, int n);

}  // namespace sb
