#include "sb/spectral_bounds.hpp"

#include <cmath>

#include "sb/moment_inequalities.hpp"

namespace sb {

namespace {

// Guarded k-th root: nonpositive operands map to 0 so degenerate traces give
// the trivial bound deterministically.
double root(double x, double k) { return x > 0.0 ? std::exp(std::log(x) / k) : 0.0; }

Bound spread(double value, const char* id) {
    Bound b;
    b.target = Target::Spread;
    b.direction = Direction::Lower;
    b.value = value;
    b.formula_id = id;
    b.scale_power = 1;
    return b;
}

double thm31_offset(const CenteredTraces& t) {
    const double n = t.n;
    const double coeff = (n * n - 3.0 * n + 3.0) / (n * n * n * std::pow(n - 1.0, 3));
    return root(coeff, 4.0) * t.trB2 / root(t.trB4, 4.0);
}

}  // namespace

std::pair<Bound, Bound> ws_eigen_bounds(const CenteredTraces& t) {
    if (t.n < 2) throw InputError("ws_eigen_bounds requires n >= 2");
    const double mean = t.trA / t.n;
    const double off = std::sqrt(std::max(0.0, t.trB2) / (static_cast<double>(t.n) * (t.n - 1)));
    Bound lo, hi;
    lo.target = Target::LambdaMin;
    lo.direction = Direction::Upper;
    lo.value = mean - off;
    lo.formula_id = "magen1";
    hi.target = Target::LambdaMax;
    hi.direction = Direction::Lower;
    hi.value = mean + off;
    hi.formula_id = "magen1";
    return {lo, hi};
}

std::pair<Bound, Bound> thm31_eigen_bounds(const CenteredTraces& t) {
    if (t.n < 2) throw InputError("thm31_eigen_bounds requires n >= 2");
    const double mean = t.trA / t.n;
    const bool degenerate = !(t.trB4 > 0.0);
    const double off = degenerate ? 0.0 : thm31_offset(t);
    Bound lo, hi;
    lo.target = Target::LambdaMin;
    lo.direction = Direction::Upper;
    lo.value = mean - off;
    lo.formula_id = "mgen1";
    lo.degenerate = degenerate;
    hi.target = Target::LambdaMax;
    hi.direction = Direction::Lower;
    hi.value = mean + off;
    hi.formula_id = "mgen2";
    hi.degenerate = degenerate;
    if (degenerate) {
        lo.note = "scalar matrix: bound degenerates to trA/n";
        hi.note = lo.note;
    }
    return {lo, hi};
}

Bound ws_condition_bound(const CenteredTraces& t) {
    if (t.n < 2) throw InputError("ws_condition_bound requires n >= 2");
    const double mean = t.trA / t.n;
    const double off = std::sqrt(std::max(0.0, t.trB2) / (static_cast<double>(t.n) * (t.n - 1)));
    const double denom = mean - off;
    if (!(denom > 0.0))
        throw NonpositiveDenominator("ws condition bound inapplicable: trA/n <= offset");
    Bound b;
    b.target = Target::ConditionNumber;
    b.direction = Direction::Lower;
    b.value = 1.0 + 2.0 * off / denom;
    b.formula_id = "magen2";
    b.scale_power = 0;
    return b;
}

Bound condition_bound_mgen4(const CenteredTraces& t) {
    if (t.n < 2) throw InputError("condition_bound_mgen4 requires n >= 2");
    Bound b;
    b.target = Target::ConditionNumber;
    b.direction = Direction::Lower;
    b.formula_id = "mgen4";
    b.scale_power = 0;
    if (!(t.trB2 > 0.0) || !(t.trB4 > 0.0)) {
        b.value = 1.0;
        b.degenerate = true;
        b.note = "scalar matrix: condition bound degenerates to 1";
        return b;
    }
    const double n = t.n;
    const double coeff = std::pow(n - 1.0, 3) / (n * (n * n - 3.0 * n + 3.0));
    const double denom = root(coeff, 4.0) * root(t.trB4, 4.0) * t.trA / t.trB2 - 1.0;
    if (!(denom > 0.0))
        throw NonpositiveDenominator("mgen4 condition bound inapplicable: denominator <= 0");
    b.value = 1.0 + 2.0 / denom;
    return b;
}

std::vector<Bound> spread_bounds(const CenteredTraces& t) {
    if (t.n < 2) throw InputError("spread_bounds requires n >= 2");
    const double n = t.n;
    const double combo = n * t.trB4 + 3.0 * t.trB2 * t.trB2;
    std::vector<Bound> out;
    out.push_back(spread(root(4.0 / (n * n) * combo, 4.0), "mgen11"));
    out.push_back(spread(root(12.0 * t.trB4 / n, 4.0), "magen4"));
    out.push_back(spread(3.0 * root(t.trB2 * t.trB4 / (12.0 * n * n), 6.0), "magen3"));
    out.push_back(
        spread(root(n * n * n * t.trB4 / max_j_quartic_coeff(t.n), 4.0), "mgen13"));
    if (t.n % 2 == 1)
        out.push_back(spread(root(4.0 / (n * n - 1.0) * combo, 4.0), "mgen12"));
    return out;
}

std::vector<Bound> functional_spread_bounds(const FunctionalMoments& fm) {
    const double gap = fm.phiB2 * fm.phiB4 - std::pow(fm.phiB2, 3);
    if (gap < -1e-12)
        throw NegativeDiscriminant(
            "phi(B^2)phi(B^4) - phi(B^2)^3 < 0: inputs violate the Pearson relation");
    std::vector<Bound> out;
    out.push_back(
        spread(std::sqrt(2.0 * std::sqrt(std::max(0.0, fm.phiB4 + 3.0 * fm.phiB2 * fm.phiB2))),
               "mgen5"));
    out.push_back(spread(root(243.0 / 4.0 * fm.phiB2 * fm.phiB4, 6.0), "mgen8"));
    const double middle = 6.0 * std::sqrt(3.0) * std::sqrt(std::max(0.0, gap));
    Bound m10 = spread(root(middle, 3.0), "mgen10");
    const double rhs = 6.0 * std::sqrt(3.0) * fm.phiB3;
    m10.note = (middle >= rhs - 1e-12 * std::max(1.0, std::abs(rhs)))
                   ? "refines mgen9: middle term dominates 6*sqrt(3)*phi(B^3)"
                   : "refinement check failed against 6*sqrt(3)*phi(B^3)";
    out.push_back(m10);
    out.push_back(spread(root(rhs, 3.0), "mgen9"));
    return out;
}

}  // namespace sb
