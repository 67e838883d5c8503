#include "sb/moment_inequalities.hpp"

#include <algorithm>
#include <cmath>

namespace sb {

namespace {

Bound make(Target t, Direction d, double value, const char* id, int scale_power) {
    Bound b;
    b.target = t;
    b.direction = d;
    b.value = value;
    b.formula_id = id;
    b.scale_power = scale_power;
    return b;
}

double pow2(double x) { return x * x; }
double pow3(double x) { return x * x * x; }
double pow4(double x) { return pow2(x) * pow2(x); }

void check_mean_in_support(double mu1p, const SupportInterval& iv) {
    const double tol = 1e-12 * std::max({1.0, std::abs(iv.m), std::abs(iv.M)});
    if (mu1p < iv.m - tol || mu1p > iv.M + tol)
        throw MeanOutOfSupport("mean lies outside the support interval");
}

}  // namespace

double max_j_quartic_coeff(int n) {
    if (n < 2) throw InputError("max_j_quartic_coeff requires n >= 2");
    if (n > 1000000) throw InputError("max_j_quartic_coeff: n too large for exhaustive loop");
    double best = 0.0;
    const double dn = n;
    for (int j = 1; j <= n - 1; ++j) {
        const double dj = j;
        const double term = dj * (dn - dj) * (dn * dn - 3.0 * dn * dj + 3.0 * dj * dj);
        best = std::max(best, term);
    }
    return best;
}

std::vector<Bound> classical_bounds(const SupportInterval& iv) {
    const double r = iv.range();
    std::vector<Bound> out;
    out.push_back(make(Target::Mu2, Direction::Upper, r * r / 4.0, "ge2", 2));
    out.push_back(make(Target::Mu3Abs, Direction::Upper, pow3(r) / (6.0 * std::sqrt(3.0)), "ge1", 3));
    out.push_back(make(Target::Mu4, Direction::Upper, pow4(r) / 12.0, "ge1", 4));
    return out;
}

Bound mean_aware_variance_bound(double mu1p, const SupportInterval& iv) {
    check_mean_in_support(mu1p, iv);
    return make(Target::Mu2, Direction::Upper, (iv.M - mu1p) * (mu1p - iv.m), "age1", 2);
}

std::pair<Bound, Bound> mu3_interval(double mu1p, double mu2, const SupportInterval& iv) {
    if (mu2 < 0.0) throw InconsistentMoments("mu2 must be nonnegative");
    if (mu2 == 0.0)
        return {make(Target::Mu3, Direction::Lower, 0.0, "ge3", 3),
                make(Target::Mu3, Direction::Upper, 0.0, "ge3", 3)};
    const double dm = mu1p - iv.m;
    const double dM = iv.M - mu1p;
    if (dm <= 0.0 || dM <= 0.0)
        throw DegenerateMean("mean at support endpoint is inconsistent with mu2 > 0");
    const double lower = (mu2 * mu2 - dm * dm * mu2) / dm;
    const double upper = (dM * dM * mu2 - mu2 * mu2) / dM;
    return {make(Target::Mu3, Direction::Lower, lower, "ge3", 3),
            make(Target::Mu3, Direction::Upper, upper, "ge3", 3)};
}

Bound ge4_check(double mu2, double mu3, const SupportInterval& iv) {
    if (!(mu2 > 0.0)) throw ZeroVariance("ge4 requires mu2 > 0");
    (void)mu3;
    const double r = iv.range();
    return make(Target::Ge4Composite, Direction::Upper, r * r / 4.0, "ge4", 2);
}

Bound generalized_samuelson(int n, int r, double xj, double xbar) {
    if (n < 2) throw InputError("generalized_samuelson requires n >= 2");
    if (r < 1) throw InputError("generalized_samuelson requires r >= 1");
    const double nm1 = std::pow(static_cast<double>(n - 1), 2 * r - 1);
    const double coeff = (1.0 + nm1) / (static_cast<double>(n) * nm1);
    const double dev = std::pow(xj - xbar, 2 * r);
    Bound b = make(r == 1 ? Target::Mu2 : Target::Mu4, Direction::Lower, coeff * dev, "ge5",
                   2 * r);
    if (r > 2) b.note = "order " + std::to_string(2 * r) + " central moment";
    return b;
}

std::pair<Bound, Bound> brunk_bounds(int n, double xbar, const SupportInterval& iv) {
    if (n < 2) throw InputError("brunk_bounds requires n >= 2");
    const double c = n - 1;
    return {make(Target::Mu2, Direction::Upper, c * pow2(xbar - iv.m), "mge27", 2),
            make(Target::Mu2, Direction::Upper, c * pow2(iv.M - xbar), "mge27", 2)};
}

std::pair<Bound, Bound> brunk_extrema_bounds(int n, double xbar, double m2) {
    if (n < 2) throw InputError("brunk_extrema_bounds requires n >= 2");
    if (m2 < 0.0) throw InconsistentMoments("m2 must be nonnegative");
    const double off = std::sqrt(m2 / static_cast<double>(n - 1));
    return {make(Target::MinValue, Direction::Upper, xbar - off, "mage7", 1),
            make(Target::MaxValue, Direction::Lower, xbar + off, "mage7", 1)};
}

std::pair<Thm21Coefficients, Bound> mu4_upper_thm21(double mu1p, double mu2,
                                                    const SupportInterval& iv) {
    check_mean_in_support(mu1p, iv);
    const double r = iv.range();
    const double g = (mu1p - iv.m) * (iv.M - mu1p);
    const double tol = 1e-12 * std::max(1.0, pow2(r));
    if (mu2 < -tol || mu2 > g + tol)
        throw VarianceInfeasible("mu2 outside [0, (M-mu1p)(mu1p-m)]");
    Thm21Coefficients c;
    c.alpha = 0.75 * r * r - 2.0 * g;
    c.beta = g * (0.25 * r * r - g);
    return {c, make(Target::Mu4, Direction::Upper, c.alpha * mu2 + c.beta, "mge1", 4)};
}

Bound mu4p_upper(double mu1p, double mu2p, const SupportInterval& iv) {
    const double tol = 1e-12 * std::max(1.0, mu1p * mu1p);
    if (mu2p < mu1p * mu1p - tol)
        throw InconsistentMoments("mu2p must be at least mu1p^2");
    const double s = iv.m + iv.M;
    const double r = iv.range();
    const double value = (0.75 * s * s - iv.m * iv.M) * mu2p + 0.25 * s * r * r * mu1p -
                         0.25 * iv.m * iv.M * s * s;
    return make(Target::Mu4Raw, Direction::Upper, value, "mge6", 4);
}

std::pair<Bound, Bound> cor22_bound(double mu1p, const SupportInterval& iv) {
    check_mean_in_support(mu1p, iv);
    const double r = iv.range();
    const double aware = r * r * (mu1p - iv.m) * (iv.M - mu1p);
    return {make(Target::SumMu43Mu2Sq, Direction::Upper, aware, "mge7", 4),
            make(Target::SumMu43Mu2Sq, Direction::Upper, pow4(r) / 4.0, "mge7", 4)};
}

Bound cor23_odd_bound(int n, const SupportInterval& iv) {
    if (n < 3 || n % 2 == 0) throw EvenN("cor23_odd_bound requires odd n >= 3");
    const double dn = n;
    const double coeff = (dn * dn - 1.0) / (4.0 * dn * dn);
    return make(Target::SumMu43Mu2Sq, Direction::Upper, coeff * pow4(iv.range()), "mge10", 4);
}

Bound thm24_m4_bound(int n, const SupportInterval& iv) {
    const double coeff = max_j_quartic_coeff(n) / pow4(static_cast<double>(n));
    return make(Target::Mu4, Direction::Upper, coeff * pow4(iv.range()), "mge13", 4);
}

Bound thm24_mean_aware_bound(double xbar, const SupportInterval& iv) {
    check_mean_in_support(xbar, iv);
    const double a = xbar - iv.m;
    const double b = iv.M - xbar;
    return make(Target::Mu4, Direction::Upper, a * b * (a * a + b * b - a * b), "mge14", 4);
}

Bound thm25_product_bound(const SupportInterval& iv) {
    return make(Target::ProductMu2Mu4, Direction::Upper, 4.0 / 243.0 * std::pow(iv.range(), 6),
                "mage1", 6);
}

Bound pearson_check(const MomentSet& ms) {
    if (!(ms.mu2 > 0.0)) throw ZeroVariance("pearson_check requires mu2 > 0");
    return make(Target::ProductMu2Mu4, Direction::Lower, ms.mu3 * ms.mu3 + pow3(ms.mu2),
                "mage6", 6);
}

std::vector<Bound> thm26_bounds(const MomentSet& ms, const SupportInterval& iv) {
    const double r = iv.range();
    const double r6 = std::pow(r, 6);
    std::vector<Bound> out;
    out.push_back(make(Target::Mu3Sq, Direction::Upper,
                       ms.mu2 * ms.mu4 - pow3(ms.mu2), "mge16", 6));
    out.push_back(make(Target::PearsonGap, Direction::Upper, r6 / 108.0, "mge16", 6));
    out.push_back(make(Target::Mu3Sq, Direction::Upper,
                       r * r * pow2(ms.mu2) - 4.0 * pow3(ms.mu2), "mge17", 6));
    out.push_back(make(Target::VarianceCubicGap, Direction::Upper, r6 / 108.0, "mge17", 6));
    // Ratio forms only when the variance is nonzero.
    if (ms.skewness && ms.studentized_range) {
        out.push_back(make(Target::SkewRatio, Direction::Upper, 4.0 / 27.0, "mge16r", 0));
        const double a3 = *ms.skewness;
        out.push_back(
            make(Target::StudentizedRangeSq, Direction::Lower, a3 * a3 + 4.0, "mge17r", 0));
    }
    return out;
}

std::vector<Bound> thm27_mu3_bounds(const MomentSet& ms, const SupportInterval& iv) {
    std::vector<Bound> out;
    const double dm = ms.mu1p - iv.m;
    const double dM = iv.M - ms.mu1p;
    out.push_back(make(Target::ProductMu2Mu3, Direction::Lower, -4.0 / 27.0 * std::pow(dm, 5),
                       "mge19", 5));
    out.push_back(make(Target::ProductMu2Mu3, Direction::Upper, 4.0 / 27.0 * std::pow(dM, 5),
                       "mge19", 5));
    out.push_back(make(Target::Mu3Raw, Direction::Lower,
                       0.25 * iv.m * iv.m * (iv.m + 3.0 * ms.mu1p), "mge20", 3));
    out.push_back(make(Target::Mu3Raw, Direction::Upper,
                       0.25 * iv.M * iv.M * (iv.M + 3.0 * ms.mu1p), "mge20", 3));
    out.push_back(make(Target::Mu3, Direction::Lower, -0.25 * pow3(dm), "mage4", 3));
    out.push_back(make(Target::Mu3, Direction::Upper, 0.25 * pow3(dM), "mage4", 3));
    if (dm > 0.0 && dM > 0.0) {
        const double lower = iv.m * ms.mu2p + pow2(iv.m * ms.mu1p - ms.mu2p) / dm;
        const double upper = iv.M * ms.mu2p - pow2(iv.M * ms.mu1p - ms.mu2p) / dM;
        out.push_back(make(Target::Mu3Raw, Direction::Lower, lower, "mge24", 3));
        out.push_back(make(Target::Mu3Raw, Direction::Upper, upper, "mge24", 3));
    }
    if (iv.m > 0.0) {
        // Positive support only; see the mge26 form for the general case.
        out.push_back(make(Target::Mu3, Direction::Lower,
                           (ms.mu2 - ms.mu1p * ms.mu1p) / ms.mu1p * ms.mu2, "mge21", 3));
    }
    if (ms.mu2 > 0.0) {
        const double disc = std::sqrt(ms.mu3 * ms.mu3 + 4.0 * pow3(ms.mu2));
        out.push_back(make(Target::MinValue, Direction::Upper,
                           ms.mu1p - (disc - ms.mu3) / (2.0 * ms.mu2), "mge26", 1));
    }
    return out;
}

std::pair<Bound, Bound> thm28_ratio_bounds(int n, const MomentSet& ms, double xbar,
                                           const SupportInterval& iv) {
    if (n < 2) throw InputError("thm28_ratio_bounds requires n >= 2");
    if (!(ms.mu4 > 0.0)) throw ZeroFourthMoment("constant sample has m4 = 0");
    const double dn = n;
    const double coeff = pow3(dn - 1.0) / (dn * dn - 3.0 * dn + 3.0);
    return {make(Target::RatioM2P4OverM4, Direction::Upper, coeff * pow4(xbar - iv.m), "mge28", 4),
            make(Target::RatioM2P4OverM4, Direction::Upper, coeff * pow4(iv.M - xbar), "mge29", 4)};
}

std::pair<Bound, Bound> cor29_extrema_bounds(int n, const MomentSet& ms, double xbar) {
    if (n < 2) throw InputError("cor29_extrema_bounds requires n >= 2");
    if (!(ms.mu4 > 0.0)) throw ZeroFourthMoment("constant sample has m4 = 0");
    const double dn = n;
    const double coeff = (dn * dn - 3.0 * dn + 3.0) / pow3(dn - 1.0);
    const double off = std::pow(coeff * pow4(ms.mu2) / ms.mu4, 0.25);
    return {make(Target::MinValue, Direction::Upper, xbar - off, "mge32", 1),
            make(Target::MaxValue, Direction::Lower, xbar + off, "mge33", 1)};
}

Bound cor210_dispersion_bound(int n) {
    if (n < 2) throw InputError("cor210_dispersion_bound requires n >= 2");
    const double dn = n;
    Bound b = make(Target::KurtosisOverV4, Direction::Lower,
                   (dn * dn - 3.0 * dn + 3.0) / pow3(dn - 1.0), "mge34", 0);
    return b;
}

namespace {

class SuiteBuilder {
public:
    SuiteBuilder(const WeightedSample& sample, const SupportInterval& iv)
        : sample_(sample), iv_(iv), ms_(compute_moments(sample, iv)) {
        const auto xs = sample.values();
        xmin_ = *std::min_element(xs.begin(), xs.end());
        xmax_ = *std::max_element(xs.begin(), xs.end());
    }

    SuiteResult build() {
        weight_free();
        if (sample_.has_equal_weights())
            equal_weight_forms();
        else
            res_.diagnostics.emplace_back(
                "equal-weight forms (ge5, mge10, mge13, mge27, mge28..mge34) skipped: "
                "weights are not uniform");
        return std::move(res_);
    }

private:
    double actual_for(const Bound& b) const {
        switch (b.target) {
            case Target::Mu2: return ms_.mu2;
            case Target::Mu3: return ms_.mu3;
            case Target::Mu3Abs: return std::abs(ms_.mu3);
            case Target::Mu3Sq: return ms_.mu3 * ms_.mu3;
            case Target::Mu4: return ms_.mu4;
            case Target::Mu3Raw: return ms_.mu3p;
            case Target::Mu4Raw: return ms_.mu4p;
            case Target::ProductMu2Mu4: return ms_.mu2 * ms_.mu4;
            case Target::ProductMu2Mu3: return ms_.mu2 * ms_.mu3;
            case Target::SumMu43Mu2Sq: return ms_.mu4 + 3.0 * pow2(ms_.mu2);
            case Target::PearsonGap: return ms_.mu2 * ms_.mu4 - pow3(ms_.mu2);
            case Target::VarianceCubicGap: {
                const double r = iv_.range();
                return r * r * pow2(ms_.mu2) - 4.0 * pow3(ms_.mu2);
            }
            case Target::RatioM2P4OverM4: return pow4(ms_.mu2) / ms_.mu4;
            case Target::SkewRatio: {
                const double a3 = *ms_.skewness;
                const double a4 = *ms_.kurtosis;
                return pow4(a3) / pow3(a4);
            }
            case Target::StudentizedRangeSq: return pow2(*ms_.studentized_range);
            case Target::Ge4Composite:
                return ms_.mu2 + pow2(ms_.mu3 / (2.0 * ms_.mu2));
            case Target::MinValue: return xmin_;
            case Target::MaxValue: return xmax_;
            case Target::KurtosisOverV4: return *ms_.kurtosis / pow4(*ms_.dispersion);
            default: return 0.0;
        }
    }

    void add(Bound b) {
        b.set_actual(actual_for(b));
        res_.bounds.push_back(std::move(b));
    }

    void add_all(std::vector<Bound> bs) {
        for (auto& b : bs) add(std::move(b));
    }

    void weight_free() {
        add_all(classical_bounds(iv_));
        add(mean_aware_variance_bound(ms_.mu1p, iv_));
        if (ms_.mu2 == 0.0 || (ms_.mu1p > iv_.m && ms_.mu1p < iv_.M)) {
            auto [lo, hi] = mu3_interval(ms_.mu1p, ms_.mu2, iv_);
            add(lo);
            add(hi);
        } else {
            res_.diagnostics.emplace_back("ge3 skipped: mean at support endpoint");
        }
        if (ms_.mu2 > 0.0)
            add(ge4_check(ms_.mu2, ms_.mu3, iv_));
        else
            res_.diagnostics.emplace_back("ge4 skipped: zero variance");
        add(mu4_upper_thm21(ms_.mu1p, ms_.mu2, iv_).second);
        add(mu4p_upper(ms_.mu1p, ms_.mu2p, iv_));
        auto [aware, free] = cor22_bound(ms_.mu1p, iv_);
        add(aware);
        add(free);
        add(thm24_mean_aware_bound(ms_.mu1p, iv_));
        add(thm25_product_bound(iv_));
        if (ms_.mu2 > 0.0)
            add(pearson_check(ms_));
        else
            res_.diagnostics.emplace_back("mage6 skipped: zero variance");
        add_all(thm26_bounds(ms_, iv_));
        add_all(thm27_mu3_bounds(ms_, iv_));
    }

    void equal_weight_forms() {
        const int n = static_cast<int>(sample_.size());
        if (n < 2) {
            res_.diagnostics.emplace_back("equal-weight forms skipped: n < 2");
            return;
        }
        // ge5 at the extreme points, orders 2 and 4.
        const double far = (std::abs(xmax_ - ms_.mu1p) >= std::abs(xmin_ - ms_.mu1p)) ? xmax_
                                                                                      : xmin_;
        add(generalized_samuelson(n, 1, far, ms_.mu1p));
        add(generalized_samuelson(n, 2, far, ms_.mu1p));
        auto [b1, b2] = brunk_bounds(n, ms_.mu1p, iv_);
        add(b1);
        add(b2);
        auto [lo, hi] = brunk_extrema_bounds(n, ms_.mu1p, ms_.mu2);
        add(lo);
        add(hi);
        if (n % 2 == 1 && n >= 3) add(cor23_odd_bound(n, iv_));
        add(thm24_m4_bound(n, iv_));
        if (ms_.mu4 > 0.0) {
            auto [r1, r2] = thm28_ratio_bounds(n, ms_, ms_.mu1p, iv_);
            add(r1);
            add(r2);
            auto [e1, e2] = cor29_extrema_bounds(n, ms_, ms_.mu1p);
            add(e1);
            add(e2);
        } else {
            res_.diagnostics.emplace_back("mge28..mge33 skipped: zero fourth moment");
        }
        if (iv_.m > 0.0 && ms_.mu2 > 0.0)
            add(cor210_dispersion_bound(n));
        else
            res_.diagnostics.emplace_back("mge34 skipped: requires positive data and mu2 > 0");
    }

    const WeightedSample& sample_;
    SupportInterval iv_;
    MomentSet ms_;
    double xmin_ = 0.0;
    double xmax_ = 0.0;
    SuiteResult res_;
};

}  // namespace

SuiteResult run_suite(const WeightedSample& sample, const SupportInterval& interval) {
    return SuiteBuilder(sample, interval).build();
}

}  // namespace sb
