#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace sb {

/// Quantity a bound constrains.
enum class Target {
    Mu2,
    Mu3,
    Mu3Abs,
    Mu3Sq,
    Mu4,
    Mu3Raw,
    Mu4Raw,
    ProductMu2Mu4,
    ProductMu2Mu3,
    SumMu43Mu2Sq,
    PearsonGap,        // mu2*mu4 - mu2^3
    VarianceCubicGap,  // r^2 mu2^2 - 4 mu2^3
    RatioM2P4OverM4,   // m2^4 / m4
    SkewRatio,        // alpha3^4 / alpha4^3
    StudentizedRangeSq,
    Ge4Composite,  // mu2 + (mu3/(2 mu2))^2
    MinValue,
    MaxValue,
    Spread,
    Span,
    ConditionNumber,
    LambdaMin,
    LambdaMax,
    KurtosisOverV4,
};

enum class Direction { Lower, Upper };

/// A computed numeric bound on a target quantity.
///
/// `slack` is signed so that slack >= 0 means the inequality is satisfied:
/// for upper bounds slack = value - actual, for lower bounds
/// slack = actual - value. It is NaN until an actual value is attached.
///
/// `scale_power` is the homogeneity degree of the bound in the data scale;
/// equality detection normalizes by max(1, r^scale_power) for range r.
struct Bound {
    Target target;
    Direction direction;
    double value = 0.0;
    std::string formula_id;
    double slack = std::numeric_limits<double>::quiet_NaN();
    int scale_power = 1;
    bool degenerate = false;
    std::string note;

    [[nodiscard]] bool has_slack() const { return !std::isnan(slack); }

    /// Attach the actual value of the target, filling in slack.
    void set_actual(double actual) {
        slack = (direction == Direction::Upper) ? value - actual : actual - value;
    }

    [[nodiscard]] double actual() const {
        return (direction == Direction::Upper) ? value - slack : value + slack;
    }

    [[nodiscard]] bool satisfied(double rel_tol = 1e-9) const {
        return slack >= -rel_tol * std::max(1.0, std::abs(actual()));
    }

    /// Equality within absolute tolerance tol after normalizing by
    /// max(1, range^scale_power).
    [[nodiscard]] bool is_equality(double range, double tol = 1e-12) const {
        const double scale = std::max(1.0, std::pow(std::abs(range), scale_power));
        return std::abs(slack) <= tol * scale;
    }
};

const char* target_name(Target t);
const char* direction_name(Direction d);

}  // namespace sb
