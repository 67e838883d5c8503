#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "sb/moment_inequalities.hpp"

using namespace sb;

namespace {

const SupportInterval kUnit(0.0, 1.0);

const Bound* find(const std::vector<Bound>& bs, const char* id, Direction dir) {
    for (const auto& b : bs)
        if (b.formula_id == id && b.direction == dir) return &b;
    return nullptr;
}

}  // namespace

TEST_CASE("classical range-only bounds on the unit interval") {
    const auto bs = classical_bounds(kUnit);
    REQUIRE(bs.size() == 3);
    CHECK(bs[0].formula_id == "ge2");
    CHECK(bs[0].value == doctest::Approx(0.25));
    CHECK(bs[1].formula_id == "ge1");
    CHECK(bs[1].value == doctest::Approx(1.0 / (6.0 * std::sqrt(3.0))).epsilon(1e-14));
    CHECK(bs[2].value == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("mean-aware variance bound and its error contract") {
    CHECK(mean_aware_variance_bound(2.0 / 3.0, kUnit).value ==
          doctest::Approx(2.0 / 9.0).epsilon(1e-14));
    CHECK_THROWS_AS(mean_aware_variance_bound(1.5, kUnit), MeanOutOfSupport);
}

TEST_CASE("mu3 interval is tight on the (1/3, 2/3) two-point sample") {
    // Oracle: values {0,1}, weights (1/3, 2/3) give mean 2/3, mu2 2/9, mu3 -2/27.
    const std::vector<double> xs{0.0, 1.0};
    const std::vector<double> ws{1.0 / 3.0, 2.0 / 3.0};
    const auto ref = oracle::direct_moments(xs, ws);
    auto [lo, hi] = mu3_interval(ref.mean, ref.mu2, kUnit);
    CHECK(lo.value == doctest::Approx(-2.0 / 27.0).epsilon(1e-14));
    CHECK(hi.value == doctest::Approx(-2.0 / 27.0).epsilon(1e-14));
    CHECK(ref.mu3 == doctest::Approx(-2.0 / 27.0).epsilon(1e-14));
    CHECK_THROWS_AS(mu3_interval(0.0, 0.1, kUnit), DegenerateMean);
}

TEST_CASE("ge4 composite bound") {
    CHECK(ge4_check(0.1, 0.0, kUnit).value == doctest::Approx(0.25));
    CHECK_THROWS_AS(ge4_check(0.0, 0.0, kUnit), ZeroVariance);
}

TEST_CASE("generalized Samuelson reduces to the classical form at r = 1") {
    // Classical Samuelson: m2 >= (x_j - xbar)^2 / (n - 1).
    const auto b = generalized_samuelson(5, 1, 3.0, 1.0);
    CHECK(b.value == doctest::Approx(4.0 / 4.0).epsilon(1e-14));
    const auto b4 = generalized_samuelson(4, 2, 1.0, 0.0);
    CHECK(b4.value == doctest::Approx((1.0 + 27.0) / (4.0 * 27.0)).epsilon(1e-14));
    CHECK_THROWS_AS(generalized_samuelson(1, 1, 0.0, 0.0), InputError);
    CHECK_THROWS_AS(generalized_samuelson(3, 0, 0.0, 0.0), InputError);
}

TEST_CASE("Brunk variance and extrema forms are equivalent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rs = oracle::random_equal_sample(rng, 2, 10);
        const auto ref = oracle::direct_moments(rs.values);
        const int n = static_cast<int>(rs.values.size());
        const double lo = *std::min_element(rs.values.begin(), rs.values.end());
        const double hi = *std::max_element(rs.values.begin(), rs.values.end());
        const SupportInterval iv(lo, hi);

        auto [v1, v2] = brunk_bounds(n, ref.mean, iv);
        CHECK(ref.mu2 <= v1.value * (1.0 + 1e-12) + 1e-12);
        CHECK(ref.mu2 <= v2.value * (1.0 + 1e-12) + 1e-12);

        auto [bm, bM] = brunk_extrema_bounds(n, ref.mean, ref.mu2);
        CHECK(lo <= bm.value + 1e-9 * std::max(1.0, std::abs(bm.value)));
        CHECK(hi >= bM.value - 1e-9 * std::max(1.0, std::abs(bM.value)));
        // Extrema form is an algebraic rearrangement of the variance form:
        // m2 = (n-1)(xbar - bm.value)^2 exactly.
        CHECK(ref.mu2 ==
              doctest::Approx((n - 1) * std::pow(ref.mean - bm.value, 2)).epsilon(1e-9));
    }
}

TEST_CASE("fourth-moment upper bound mge1 is exact at weights (1/3, 2/3)") {
    const std::vector<double> xs{0.0, 1.0};
    const std::vector<double> ws{1.0 / 3.0, 2.0 / 3.0};
    const auto ref = oracle::direct_moments(xs, ws);
    auto [coeffs, b] = mu4_upper_thm21(ref.mean, ref.mu2, kUnit);
    CHECK(coeffs.alpha == doctest::Approx(11.0 / 36.0).epsilon(1e-14));
    CHECK(coeffs.beta == doctest::Approx(1.0 / 162.0).epsilon(1e-14));
    CHECK(b.value == doctest::Approx(ref.mu4).epsilon(1e-14));  // oracle mu4 = 2/27
    CHECK_THROWS_AS(mu4_upper_thm21(0.5, 0.3, kUnit), VarianceInfeasible);
}

TEST_CASE("raw fourth-moment bound mge6") {
    // Support [0,1]: value = (3/4) mu2p + (1/4) mu1p.
    const auto b = mu4p_upper(0.5, 0.5, kUnit);
    CHECK(b.value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(mu4p_upper(1.0, 0.5, kUnit), InconsistentMoments);
}

TEST_CASE("mge7 composite is exact for any symmetric two-point sample") {
    const auto ref = oracle::direct_moments(std::vector<double>{0.0, 1.0});
    auto [aware, fre] = cor22_bound(ref.mean, kUnit);
    CHECK(aware.value == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(fre.value == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(ref.mu4 + 3.0 * ref.mu2 * ref.mu2 == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("mge10 requires odd n and is exact on {m, m, M}") {
    CHECK_THROWS_AS(cor23_odd_bound(4, kUnit), EvenN);
    const auto ref = oracle::direct_moments(std::vector<double>{0.0, 0.0, 1.0});
    const auto b = cor23_odd_bound(3, kUnit);
    CHECK(b.value == doctest::Approx(8.0 / 36.0).epsilon(1e-14));
    CHECK(ref.mu4 + 3.0 * ref.mu2 * ref.mu2 == doctest::Approx(b.value).epsilon(1e-13));
}

TEST_CASE("mge13 coefficient stays in [1/16, 1/12] and approaches 1/12") {
    for (int n = 2; n <= 100; ++n) {
        const double coeff = max_j_quartic_coeff(n) / std::pow(static_cast<double>(n), 4);
        CHECK(coeff >= 1.0 / 16.0 - 1e-15);  // minimum at n = 2
        CHECK(coeff <= 1.0 / 12.0 + 1e-15);  // never sharper than the range-only cap
    }
    CHECK(max_j_quartic_coeff(100) / 1e8 == doctest::Approx(1.0 / 12.0).epsilon(1e-3));
    CHECK(max_j_quartic_coeff(2) == doctest::Approx(1.0));
    CHECK(max_j_quartic_coeff(3) == doctest::Approx(6.0));
    CHECK(max_j_quartic_coeff(9) == doctest::Approx(546.0));  // attained at j = 2
    CHECK_THROWS_AS(max_j_quartic_coeff(1), InputError);
}

TEST_CASE("mge13 and mge14 are exact on {m, m, m, M}") {
    const std::vector<double> xs{0.0, 0.0, 0.0, 1.0};
    const auto ref = oracle::direct_moments(xs);
    const auto b13 = thm24_m4_bound(4, kUnit);
    CHECK(b13.value == doctest::Approx(21.0 / 256.0).epsilon(1e-14));
    CHECK(ref.mu4 == doctest::Approx(b13.value).epsilon(1e-13));
    const auto b14 = thm24_mean_aware_bound(ref.mean, kUnit);
    CHECK(ref.mu4 == doctest::Approx(b14.value).epsilon(1e-13));
}

TEST_CASE("mage1 product bound is exact at weights (1/3, 2/3)") {
    const std::vector<double> xs{0.0, 1.0};
    const std::vector<double> ws{1.0 / 3.0, 2.0 / 3.0};
    const auto ref = oracle::direct_moments(xs, ws);
    const auto b = thm25_product_bound(kUnit);
    CHECK(b.value == doctest::Approx(4.0 / 243.0).epsilon(1e-14));
    CHECK(ref.mu2 * ref.mu4 == doctest::Approx(b.value).epsilon(1e-13));
}

TEST_CASE("thm26: mge16 second inequality is exact at p = 1/2 + 1/(2 sqrt 3)") {
    const double p = 0.5 + 0.5 / std::sqrt(3.0);
    const std::vector<double> xs{0.0, 1.0};
    const std::vector<double> ws{p, 1.0 - p};
    const auto ref = oracle::direct_moments(xs, ws);
    MomentSet ms;
    ms.mu1p = ref.mean;
    ms.mu2 = ref.mu2;
    ms.mu3 = ref.mu3;
    ms.mu4 = ref.mu4;
    const auto bs = thm26_bounds(ms, kUnit);
    const Bound* gap = find(bs, "mge16", Direction::Upper);
    REQUIRE(gap != nullptr);
    // First mge16 entry bounds mu3^2 by the Pearson gap; check tightness of the
    // second (range) inequality: mu2*mu4 - mu2^3 = r^6/108 at this weight.
    CHECK(ref.mu2 * ref.mu4 - std::pow(ref.mu2, 3) ==
          doctest::Approx(1.0 / 108.0).epsilon(1e-12));
    // Without variance the ratio forms are absent, but the absolute forms remain.
    MomentSet flat;
    flat.mu1p = 0.5;
    const auto fbs = thm26_bounds(flat, kUnit);
    CHECK(fbs.size() == 4);
}

TEST_CASE("thm27 third-moment family on a positive-support sample") {
    const std::vector<double> xs{1.0, 2.0, 4.0};
    const auto ref = oracle::direct_moments(xs);
    MomentSet ms;
    ms.mu1p = ref.mean;
    ms.mu2p = ref.mu2p;
    ms.mu2 = ref.mu2;
    ms.mu3 = ref.mu3;
    ms.mu4 = ref.mu4;
    const SupportInterval iv(1.0, 4.0);
    const auto bs = thm27_mu3_bounds(ms, iv);
    CHECK(find(bs, "mge19", Direction::Lower) != nullptr);
    CHECK(find(bs, "mge19", Direction::Upper) != nullptr);
    CHECK(find(bs, "mge20", Direction::Lower) != nullptr);
    CHECK(find(bs, "mage4", Direction::Upper) != nullptr);
    CHECK(find(bs, "mge24", Direction::Lower) != nullptr);
    CHECK(find(bs, "mge21", Direction::Lower) != nullptr);
    CHECK(find(bs, "mge26", Direction::Upper) != nullptr);
    // mge21 is stated for positive support only; it drops out at m = 0.
    const auto bs0 = thm27_mu3_bounds(ms, SupportInterval(0.0, 4.0));
    CHECK(find(bs0, "mge21", Direction::Lower) == nullptr);
}

TEST_CASE("mge28 and mge32 are exact on {m, m, m, M}") {
    const std::vector<double> xs{0.0, 0.0, 0.0, 1.0};
    const auto ref = oracle::direct_moments(xs);
    MomentSet ms;
    ms.mu1p = ref.mean;
    ms.mu2 = ref.mu2;
    ms.mu4 = ref.mu4;
    auto [r1, r2] = thm28_ratio_bounds(4, ms, ref.mean, kUnit);
    CHECK(r1.formula_id == "mge28");
    const double ratio = std::pow(ref.mu2, 4) / ref.mu4;
    CHECK(ratio == doctest::Approx(r1.value).epsilon(1e-13));
    CHECK(ratio <= r2.value + 1e-13);
    auto [e1, e2] = cor29_extrema_bounds(4, ms, ref.mean);
    CHECK(e1.formula_id == "mge32");
    CHECK(e1.value == doctest::Approx(0.0).epsilon(1e-13));  // min value attained
    CHECK(e2.value <= 1.0 + 1e-13);
    MomentSet zero;
    CHECK_THROWS_AS(thm28_ratio_bounds(4, zero, 0.0, kUnit), ZeroFourthMoment);
}

TEST_CASE("mge34 constant") {
    CHECK(cor210_dispersion_bound(4).value == doctest::Approx(7.0 / 27.0).epsilon(1e-14));
    CHECK_THROWS_AS(cor210_dispersion_bound(1), InputError);
}

TEST_CASE("bounds are shift invariant and scale equivariant") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rs = oracle::random_equal_sample(rng, 3, 8);
        const auto ref = oracle::direct_moments(rs.values);
        const double lo = *std::min_element(rs.values.begin(), rs.values.end());
        const double hi = *std::max_element(rs.values.begin(), rs.values.end());
        const SupportInterval iv(lo, hi);
        const double shift = 2.5;
        const double scale = 3.0;
        std::vector<double> tx(rs.values.size());
        for (std::size_t i = 0; i < tx.size(); ++i) tx[i] = scale * rs.values[i] + shift;
        const auto tref = oracle::direct_moments(tx);
        const SupportInterval tiv(scale * lo + shift, scale * hi + shift);

        const auto b = thm24_mean_aware_bound(ref.mean, iv);
        const auto tb = thm24_mean_aware_bound(tref.mean, tiv);
        CHECK(tb.value == doctest::Approx(std::pow(scale, 4) * b.value).epsilon(1e-9));

        const auto p = thm25_product_bound(iv);
        const auto tp = thm25_product_bound(tiv);
        CHECK(tp.value == doctest::Approx(std::pow(scale, 6) * p.value).epsilon(1e-9));
    }
}

TEST_CASE("suite fuzz: every applicable bound holds on random samples") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto rs = (trial % 2 == 0) ? oracle::random_weighted_sample(rng)
                                         : oracle::random_equal_sample(rng);
        const WeightedSample s(rs.values, rs.weights);
        const auto res = run_suite(s, SupportInterval(rs.m, rs.M));
        REQUIRE(!res.bounds.empty());
        if (!res.all_satisfied()) {
            for (const auto& b : res.bounds)
                if (b.has_slack() && !b.satisfied())
                    FAIL_CHECK(b.formula_id << " violated with slack " << b.slack);
        }
    }
}

TEST_CASE("suite gates equal-weight forms on uniform weights") {
    const WeightedSample weighted({0.0, 0.4, 1.0}, {0.2, 0.5, 0.3});
    const auto res = run_suite(weighted, kUnit);
    for (const auto& b : res.bounds) {
        CHECK(b.formula_id != "ge5");
        CHECK(b.formula_id != "mge13");
        CHECK(b.formula_id != "mge27");
    }
    bool noted = false;
    for (const auto& d : res.diagnostics)
        if (d.find("equal-weight forms") != std::string::npos) noted = true;
    CHECK(noted);

    const WeightedSample uniform = WeightedSample::equal_weights({0.0, 0.4, 1.0});
    const auto ures = run_suite(uniform, kUnit);
    bool has13 = false;
    for (const auto& b : ures.bounds)
        if (b.formula_id == "mge13") has13 = true;
    CHECK(has13);
    CHECK(ures.all_satisfied());
}
