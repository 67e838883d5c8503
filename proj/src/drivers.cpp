#include "sb/drivers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sb/moment_inequalities.hpp"
#include "sb/poly_bounds.hpp"
#include "sb/spectral_bounds.hpp"

namespace sb {

namespace {

std::string join(std::span<const double> xs) {
    std::ostringstream out;
    char buf[48];
    out << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", xs[i]);
        out << (i ? "," : "") << buf;
    }
    out << "]";
    return out.str();
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void attach_spectrum_actuals(std::vector<Bound>& bounds, std::span<const double> eigs) {
    const double lmin = *std::min_element(eigs.begin(), eigs.end());
    const double lmax = *std::max_element(eigs.begin(), eigs.end());
    for (auto& b : bounds) {
        switch (b.target) {
            case Target::LambdaMin: b.set_actual(lmin); break;
            case Target::LambdaMax: b.set_actual(lmax); break;
            case Target::Spread: b.set_actual(lmax - lmin); break;
            case Target::ConditionNumber:
                if (lmin > 0.0) b.set_actual(lmax / lmin);
                break;
            default: break;
        }
    }
}

void spectral_report_body(Report& rep, const CenteredTraces& t) {
    if (t.n < 2) {
        rep.diagnostics.emplace_back("order-1 input: every bound is trivial");
        return;
    }
    auto [wlo, whi] = ws_eigen_bounds(t);
    rep.bounds.push_back(wlo);
    rep.bounds.push_back(whi);
    auto [tlo, thi] = thm31_eigen_bounds(t);
    rep.bounds.push_back(tlo);
    rep.bounds.push_back(thi);
    try {
        rep.bounds.push_back(ws_condition_bound(t));
    } catch (const NonpositiveDenominator&) {
        rep.diagnostics.emplace_back("magen2 skipped: nonpositive denominator");
    }
    try {
        rep.bounds.push_back(condition_bound_mgen4(t));
    } catch (const NonpositiveDenominator&) {
        rep.diagnostics.emplace_back("mgen4 skipped: nonpositive denominator");
    }
    for (auto& b : spread_bounds(t)) rep.bounds.push_back(std::move(b));
}

}  // namespace

Report build_sample_report(const io::SampleInput& input,
                           std::optional<SupportInterval> interval) {
    Report rep;
    rep.subject = Subject::Sample;
    WeightedSample sample =
        input.weights ? WeightedSample(input.values, *input.weights)
                      : WeightedSample::equal_weights(input.values);
    const SupportInterval iv = interval ? *interval : validate_support(sample);
    if (interval) {
        const SupportInterval tight = validate_support(sample);
        if (tight.m < iv.m || tight.M > iv.M)
            throw ValueOutOfSupport("sample values exceed the supplied interval");
    }
    rep.inputs_echo = "values=" + join(sample.values()) + " weights=" + join(sample.weights()) +
                      " interval=[" + num(iv.m) + "," + num(iv.M) + "]";
    auto suite = run_suite(sample, iv);
    rep.bounds = std::move(suite.bounds);
    rep.diagnostics = std::move(suite.diagnostics);
    rep.erratum_flags = input.notes;
    return rep;
}

Report build_matrix_report(const io::MatrixInput& input, const MatrixReportOptions& opts) {
    Report rep;
    rep.erratum_flags = input.notes;

    if (input.spectrum) {
        rep.subject = Subject::Spectrum;
        rep.inputs_echo = "eigenvalues=" + join(*input.spectrum);
        const auto t = spectrum_to_traces(*input.spectrum);
        spectral_report_body(rep, t);
        attach_spectrum_actuals(rep.bounds, *input.spectrum);
        return rep;
    }

    const SquareMatrix& A = *input.matrix;
    rep.subject = opts.functional ? Subject::Functional : Subject::Matrix;
    rep.inputs_echo = "matrix n=" + std::to_string(A.order()) + " trA=" + num(A.trace().real());
    const auto t = centered_traces(A);
    spectral_report_body(rep, t);

    if (opts.functional) {
        const auto fm = functional_moments(A, *opts.functional);
        for (auto& b : functional_spread_bounds(fm)) rep.bounds.push_back(std::move(b));
    }
    if (opts.with_oracle) {
        const auto eigs = eigen_oracle(A);
        attach_spectrum_actuals(rep.bounds, eigs);
        rep.diagnostics.push_back("oracle eigenvalues: " + join(eigs));
    }
    return rep;
}

Report build_poly_report(const io::PolynomialInput& input) {
    Report rep;
    rep.subject = Subject::Polynomial;
    rep.erratum_flags = input.notes;
    const Polynomial& p = input.poly;
    const int n = p.degree();
    rep.inputs_echo = "coefficients=" + join(p.coefficients());

    const DepressedForm d = depress(p);
    std::ostringstream info;
    info << "depressed: shift=" << num(d.shift) << " a2=" << num(d.a2);
    if (d.a3) info << " a3=" << num(*d.a3);
    if (d.a4) info << " a4=" << num(*d.a4);
    info << " m2=" << num(d.m2);
    if (d.m4) info << " m4=" << num(*d.m4);
    rep.diagnostics.push_back(info.str());

    if (n >= 5) {
        try {
            auto [lo, hi] = thm41_root_bounds(d, n);
            rep.bounds.push_back(lo);
            rep.bounds.push_back(hi);
        } catch (const ZeroFourthMoment&) {
            rep.diagnostics.emplace_back("pgen3/pgen4 skipped: all roots coincide");
        }
    } else {
        rep.diagnostics.emplace_back("pgen3/pgen4 skipped: n >= 5 required");
    }
    if (n >= 4) {
        for (auto& b : thm42_span_bounds(d, n)) rep.bounds.push_back(std::move(b));
    } else {
        rep.diagnostics.emplace_back("span bounds skipped: degree >= 4 required");
    }

    if (input.roots) {
        const auto& rs = *input.roots;
        const double rmin = *std::min_element(rs.begin(), rs.end());
        const double rmax = *std::max_element(rs.begin(), rs.end());
        for (auto& b : rep.bounds) {
            switch (b.target) {
                case Target::MinValue: b.set_actual(rmin); break;
                case Target::MaxValue: b.set_actual(rmax); break;
                case Target::Span: b.set_actual(rmax - rmin); break;
                default: break;
            }
        }
    }
    return rep;
}

}  // namespace sb
