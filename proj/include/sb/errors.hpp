#pragma once

#include <stdexcept>
#include <string>

namespace sb {

/// Base class for all domain errors raised by the bounds library.
struct BoundsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sample / moment errors
struct InvalidWeights : BoundsError { using BoundsError::BoundsError; };
struct ValueOutOfSupport : BoundsError { using BoundsError::BoundsError; };
struct MeanOutOfSupport : BoundsError { using BoundsError::BoundsError; };
struct DegenerateMean : BoundsError { using BoundsError::BoundsError; };
struct ZeroVariance : BoundsError { using BoundsError::BoundsError; };
struct VarianceInfeasible : BoundsError { using BoundsError::BoundsError; };
struct InconsistentMoments : BoundsError { using BoundsError::BoundsError; };
struct NonpositiveSupport : BoundsError { using BoundsError::BoundsError; };
struct ZeroFourthMoment : BoundsError { using BoundsError::BoundsError; };
struct EvenN : BoundsError { using BoundsError::BoundsError; };

// Matrix / functional errors
struct NotHermitian : BoundsError { using BoundsError::BoundsError; };
struct NonNegligibleImaginaryTrace : BoundsError { using BoundsError::BoundsError; };
struct InvalidFunctional : BoundsError { using BoundsError::BoundsError; };
struct NoConvergence : BoundsError { using BoundsError::BoundsError; };
struct NegativeDiscriminant : BoundsError { using BoundsError::BoundsError; };
struct NonpositiveDenominator : BoundsError { using BoundsError::BoundsError; };

// Polynomial errors
struct DegreeTooSmall : BoundsError { using BoundsError::BoundsError; };
struct NotRealRootFeasible : BoundsError { using BoundsError::BoundsError; };

// Input / schema errors (CLI layer)
struct InputError : BoundsError { using BoundsError::BoundsError; };

}  // namespace sb
