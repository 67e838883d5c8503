#include "sb/poly_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "sb/moment_inequalities.hpp"

namespace sb {

namespace {

double root(double x, double k) { return x > 0.0 ? std::exp(std::log(x) / k) : 0.0; }

Bound make(Target t, Direction dir, double value, const char* id, int scale_power = 1) {
    Bound b;
    b.target = t;
    b.direction = dir;
    b.value = value;
    b.formula_id = id;
    b.scale_power = scale_power;
    return b;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() < 2) throw InputError("polynomial degree must be >= 1");
    if (coeffs_.front() != 1.0) throw InputError("polynomial must be monic");
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw InputError("polynomial coefficients must be finite");
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
    if (roots.empty()) throw InputError("need at least one root");
    std::vector<double> c{1.0};
    for (double r : roots) {
        c.push_back(0.0);
        for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] -= r * c[j - 1];
    }
    return Polynomial(std::move(c));
}

DepressedForm depress(const Polynomial& p) {
    const int n = p.degree();
    if (n < 2) throw DegreeTooSmall("depression needs degree >= 2 to expose a2");
    const auto in = p.coefficients();
    std::vector<double> c(in.begin(), in.end());
    const double shift = (c[1] == 0.0) ? 0.0 : -c[1] / n;

    // Taylor recentering by repeated synthetic division at the shift point.
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n - i; ++j)
            c[static_cast<std::size_t>(j)] += shift * c[static_cast<std::size_t>(j - 1)];

    double cscale = 0.0;
    for (double v : c) cscale = std::max(cscale, std::abs(v));
    if (std::abs(c[1]) > 1e-12 * std::max(1.0, cscale))
        throw InputError("depression failed to cancel the x^(n-1) coefficient");

    DepressedForm d;
    d.shift = shift;
    d.a2 = c[2];
    if (n >= 3) d.a3 = c[3];
    if (n >= 4) d.a4 = c[4];
    d.m2 = -2.0 * d.a2 / n;
    const double tol2 = 1e-9 * std::max(1.0, std::abs(d.a2));
    if (d.m2 < -tol2)
        throw NotRealRootFeasible("m2 < 0: roots cannot all be real");
    d.m2 = std::max(0.0, d.m2);
    if (d.a4) {
        const double q = d.a2 * d.a2 - 2.0 * *d.a4;
        const double tol4 = 1e-9 * std::max(1.0, d.a2 * d.a2 + 2.0 * std::abs(*d.a4));
        if (q < -tol4)
            throw NotRealRootFeasible("m4 < 0: roots cannot all be real");
        d.m4 = std::max(0.0, 2.0 / n * q);
    }
    return d;
}

std::pair<Bound, Bound> thm41_root_bounds(const DepressedForm& d, int n) {
    if (n < 5) throw DegreeTooSmall("root bounds are stated for n >= 5 only");
    if (!d.a4) throw DegreeTooSmall("root bounds need the a4 coefficient");
    const double q = d.a2 * d.a2 - 2.0 * *d.a4;
    if (!(q > 0.0)) throw ZeroFourthMoment("a2^2 = 2 a4: all roots coincide");
    const double dn = n;
    const double coeff = 8.0 * (dn * dn - 3.0 * dn + 3.0) / (dn * dn * dn * std::pow(dn - 1.0, 3));
    const double off = root(coeff * std::pow(d.a2, 4) / q, 4.0);
    return {make(Target::MinValue, Direction::Upper, d.shift - off, "pgen3"),
            make(Target::MaxValue, Direction::Lower, d.shift + off, "pgen4")};
}

std::vector<Bound> thm42_span_bounds(const DepressedForm& d, int n) {
    if (n < 2) throw DegreeTooSmall("span bounds need degree >= 2");
    if (!d.a4) throw DegreeTooSmall("span bounds need the a4 coefficient (degree >= 4)");
    const double dn = n;
    const double a2 = d.a2;
    const double a4 = *d.a4;
    const double q = a2 * a2 - 2.0 * a4;
    std::vector<Bound> out;
    out.push_back(make(Target::Span, Direction::Lower,
                       root(8.0 * (q / dn + 6.0 * a2 * a2 / (dn * dn)), 4.0), "pgen5"));
    out.push_back(make(Target::Span, Direction::Lower,
                       root(2.0 * dn * dn * dn * q / max_j_quartic_coeff(n), 4.0), "pgen6"));
    const double operand = 243.0 / (dn * dn) * a2 * (2.0 * a4 - a2 * a2);
    Bound p7 = make(Target::Span, Direction::Lower, 0.0, "pgen7");
    const double tol = 1e-9 * std::max(1.0, std::abs(a2) * (a2 * a2 + 2.0 * std::abs(a4)));
    if (operand < -tol) {
        p7.degenerate = true;
        p7.note = "negative sixth-root operand: coefficients not consistent with all-real roots";
    } else {
        p7.value = root(operand, 6.0);
    }
    out.push_back(p7);
    if (n % 2 == 1)
        out.push_back(make(Target::Span, Direction::Lower,
                           root(8.0 * dn / (dn * dn - 1.0) * (q + 6.0 * a2 * a2 / dn), 4.0),
                           "pgen8"));
    return out;
}

}  // namespace sb
