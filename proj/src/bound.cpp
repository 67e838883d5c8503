#include "sb/bound.hpp"

namespace sb {

const char* target_name(Target t) {
    switch (t) {
        case Target::Mu2: return "mu2";
        case Target::Mu3: return "mu3";
        case Target::Mu3Abs: return "mu3_abs";
        case Target::Mu3Sq: return "mu3_sq";
        case Target::Mu4: return "mu4";
        case Target::Mu3Raw: return "mu3p";
        case Target::Mu4Raw: return "mu4p";
        case Target::ProductMu2Mu4: return "product_mu2mu4";
        case Target::ProductMu2Mu3: return "product_mu2mu3";
        case Target::SumMu43Mu2Sq: return "sum_mu4_3mu2sq";
        case Target::PearsonGap: return "pearson_gap";
        case Target::VarianceCubicGap: return "variance_cubic_gap";
        case Target::RatioM2P4OverM4: return "ratio_m2p4_over_m4";
        case Target::SkewRatio: return "skew_ratio";
        case Target::StudentizedRangeSq: return "studentized_range_sq";
        case Target::Ge4Composite: return "ge4_composite";
        case Target::MinValue: return "min_value";
        case Target::MaxValue: return "max_value";
        case Target::Spread: return "spread";
        case Target::Span: return "span";
        case Target::ConditionNumber: return "condition_number";
        case Target::LambdaMin: return "lambda_min";
        case Target::LambdaMax: return "lambda_max";
        case Target::KurtosisOverV4: return "kurtosis_over_V4";
    }
    return "unknown";
}

const char* direction_name(Direction d) {
    return d == Direction::Lower ? "lower" : "upper";
}

}  // namespace sb
