#pragma once

#include <utility>
#include <vector>

#include "sb/bound.hpp"
#include "sb/errors.hpp"
#include "sb/sample_moments.hpp"

namespace sb {

/// Coefficients of the quartic-vs-variance bound mu4 <= alpha*mu2 + beta.
struct Thm21Coefficients {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Shared combinatorial factor: max over j in {1..n-1} of
/// j(n-j)(n^2 - 3nj + 3j^2). Exhaustive loop, guarded at n <= 10^6.
double max_j_quartic_coeff(int n);

// Range-only bounds: |mu3| <= r^3/(6 sqrt 3), mu4 <= r^4/12, mu2 <= r^2/4.
std::vector<Bound> classical_bounds(const SupportInterval& interval);

// mu2 <= (M - mu1p)(mu1p - m)
Bound mean_aware_variance_bound(double mu1p, const SupportInterval& interval);

// Two-sided bound on mu3 given mean and variance.
std::pair<Bound, Bound> mu3_interval(double mu1p, double mu2, const SupportInterval& interval);

// mu2 + (mu3/(2 mu2))^2 <= r^2/4
Bound ge4_check(double mu2, double mu3, const SupportInterval& interval);

// m_{2r} >= (1 + (n-1)^{2r-1}) / (n (n-1)^{2r-1}) * (x_j - xbar)^{2r}
Bound generalized_samuelson(int n, int r, double xj, double xbar);

// m2 <= (n-1)(M - xbar)^2 and m2 <= (n-1)(xbar - m)^2
std::pair<Bound, Bound> brunk_bounds(int n, double xbar, const SupportInterval& interval);

// Equivalent extrema form: m <= xbar - sqrt(m2/(n-1)), M >= xbar + sqrt(m2/(n-1)).
std::pair<Bound, Bound> brunk_extrema_bounds(int n, double xbar, double m2);

// mu4 <= alpha*mu2 + beta with explicit coefficients.
std::pair<Thm21Coefficients, Bound> mu4_upper_thm21(double mu1p, double mu2,
                                                    const SupportInterval& interval);

// Raw fourth-moment upper bound from mu1p and mu2p.
Bound mu4p_upper(double mu1p, double mu2p, const SupportInterval& interval);

// mu4 + 3 mu2^2 <= r^2 (mu1p - m)(M - mu1p) <= r^4/4 (mean-aware, mean-free).
std::pair<Bound, Bound> cor22_bound(double mu1p, const SupportInterval& interval);

// m4 + 3 m2^2 <= (n^2-1)/(4n^2) r^4, odd n only.
Bound cor23_odd_bound(int n, const SupportInterval& interval);

// m4 <= max_j j(n-j)(n^2-3nj+3j^2)/n^4 * r^4
Bound thm24_m4_bound(int n, const SupportInterval& interval);

// m4 <= (xbar-m)(M-xbar)((xbar-m)^2 + (M-xbar)^2 - (xbar-m)(M-xbar))
Bound thm24_mean_aware_bound(double xbar, const SupportInterval& interval);

// mu2 * mu4 <= 4 r^6 / 243
Bound thm25_product_bound(const SupportInterval& interval);

// Pearson skewness-kurtosis relation in product form: mu2*mu4 >= mu3^2 + mu2^3.
Bound pearson_check(const MomentSet& moments);

// mu3^2 <= mu2*mu4 - mu2^3 <= r^6/108; mu3^2 <= r^2 mu2^2 - 4 mu2^3 <= r^6/108;
// alpha3^4/alpha4^3 <= 4/27; alpha3^2 + 4 <= q^2.
std::vector<Bound> thm26_bounds(const MomentSet& moments, const SupportInterval& interval);

// Two-sided bounds on mu2*mu3, mu3p (central + raw forms), mu3; positive-support
// lower bound on mu3; upper bound on the minimum value via the mu3/mu2 form.
std::vector<Bound> thm27_mu3_bounds(const MomentSet& moments, const SupportInterval& interval);

// m2^4/m4 <= (n-1)^3/(n^2-3n+3) * (xbar-m)^4 and (M-xbar)^4.
std::pair<Bound, Bound> thm28_ratio_bounds(int n, const MomentSet& moments, double xbar,
                                           const SupportInterval& interval);

// m <= xbar - ((n^2-3n+3)/(n-1)^3 * m2^4/m4)^(1/4), M >= xbar + same offset.
std::pair<Bound, Bound> cor29_extrema_bounds(int n, const MomentSet& moments, double xbar);

// alpha4 / V^4 >= (n^2-3n+3)/(n-1)^3 for positive data.
Bound cor210_dispersion_bound(int n);

/// Full inequality sweep over a sample. Every applicable bound is evaluated
/// against the sample's actual moments and returned with slack filled in;
/// inapplicable forms become diagnostics instead of errors. Inequalities
/// stated for n equally likely values run only on equal-weight samples.
struct SuiteResult {
    std::vector<Bound> bounds;
    std::vector<std::string> diagnostics;

    [[nodiscard]] bool all_satisfied(double rel_tol = 1e-9) const {
        for (const auto& b : bounds)
            if (b.has_slack() && !b.satisfied(rel_tol)) return false;
        return true;
    }
};

SuiteResult run_suite(const WeightedSample& sample, const SupportInterval& interval);

}  // namespace sb
