#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sb/errors.hpp"

namespace sb {

/// Closed interval [m, M] known to contain every sample value.
struct SupportInterval {
    double m = 0.0;
    double M = 0.0;

    SupportInterval() = default;
    SupportInterval(double lower, double upper) : m(lower), M(upper) {
        if (!(m <= M)) throw InputError("support interval requires m <= M");
    }

    [[nodiscard]] double range() const { return M - m; }
};

/// Finitely many real values with nonnegative weights summing to 1.
///
/// Weights are validated (each >= 0, sum within 1e-12 of 1) and then
/// renormalized exactly so downstream bounds are deterministic. The
/// equal-weights constructor assigns 1/n to every point.
class WeightedSample {
public:
    WeightedSample(std::vector<double> values, std::vector<double> weights);

    static WeightedSample equal_weights(std::vector<double> values);

    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] std::span<const double> weights() const { return weights_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] bool has_equal_weights() const { return equal_weights_; }

private:
    std::vector<double> values_;
    std::vector<double> weights_;
    bool equal_weights_ = false;
};

/// Raw and central moments up to order 4 plus derived statistics.
/// Derived entries are absent (not NaN) when their denominator vanishes.
struct MomentSet {
    double mu1p = 0.0;
    double mu2p = 0.0;
    double mu3p = 0.0;
    double mu4p = 0.0;
    double mu2 = 0.0;
    double mu3 = 0.0;
    double mu4 = 0.0;
    std::optional<double> skewness;           // alpha3 = mu3 / mu2^(3/2)
    std::optional<double> kurtosis;           // alpha4 = mu4 / mu2^2
    std::optional<double> studentized_range;  // q = r / sqrt(mu2)
    std::optional<double> dispersion;         // V = sqrt(mu2) / mu1p
};

/// Two-pass moment computation: mean first, then centered power sums.
/// Throws ValueOutOfSupport if a value falls outside [m, M].
MomentSet compute_moments(const WeightedSample& sample, const SupportInterval& interval);

/// Tightest interval [min value, max value] of the sample.
SupportInterval validate_support(const WeightedSample& sample);

}  // namespace sb
