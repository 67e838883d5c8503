#include "sb/sample_moments.hpp"

#include <algorithm>
#include <cmath>

#include "sb/kernels.hpp"

namespace sb {

namespace {
constexpr double kWeightSumTol = 1e-12;
}

WeightedSample::WeightedSample(std::vector<double> values, std::vector<double> weights)
    : values_(std::move(values)), weights_(std::move(weights)) {
    if (values_.empty()) throw InvalidWeights("sample must contain at least one value");
    if (weights_.size() != values_.size())
        throw InvalidWeights("weights length must equal values length");
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) throw InvalidWeights("weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol)
        throw InvalidWeights("weights must sum to 1 within 1e-12");
    // Exact renormalization after validation.
    for (double& w : weights_) w /= sum;
    equal_weights_ = true;
    const double p = 1.0 / static_cast<double>(values_.size());
    for (double w : weights_)
        if (w != p) {
            equal_weights_ = false;
            break;
        }
}

WeightedSample WeightedSample::equal_weights(std::vector<double> values) {
    if (values.empty()) throw InvalidWeights("sample must contain at least one value");
    const double p = 1.0 / static_cast<double>(values.size());
    std::vector<double> w(values.size(), p);
    WeightedSample s(std::move(values), std::move(w));
    s.equal_weights_ = true;
    return s;
}

MomentSet compute_moments(const WeightedSample& sample, const SupportInterval& interval) {
    const auto xs = sample.values();
    const auto ws = sample.weights();
    const double scale = std::max({1.0, std::abs(interval.m), std::abs(interval.M)});
    for (double x : xs)
        if (x < interval.m - 1e-12 * scale || x > interval.M + 1e-12 * scale)
            throw ValueOutOfSupport("sample value outside support interval");

    const auto raw = kernels::raw_power_sums(xs, ws);
    MomentSet ms;
    ms.mu1p = raw.s1;
    ms.mu2p = raw.s2;
    ms.mu3p = raw.s3;
    ms.mu4p = raw.s4;

    const auto c = kernels::centered_power_sums(xs, ws, ms.mu1p);
    ms.mu2 = std::max(0.0, c.s2);
    ms.mu3 = c.s3;
    ms.mu4 = std::max(0.0, c.s4);

    if (ms.mu2 > 0.0) {
        ms.skewness = ms.mu3 / std::pow(ms.mu2, 1.5);
        ms.kurtosis = ms.mu4 / (ms.mu2 * ms.mu2);
        ms.studentized_range = interval.range() / std::sqrt(ms.mu2);
    }
    if (ms.mu1p != 0.0) ms.dispersion = std::sqrt(ms.mu2) / ms.mu1p;
    return ms;
}

SupportInterval validate_support(const WeightedSample& sample) {
    const auto xs = sample.values();
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return SupportInterval(*lo, *hi);
}

}  // namespace sb
