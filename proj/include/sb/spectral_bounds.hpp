#pragma once

#include <utility>
#include <vector>

#include "sb/bound.hpp"
#include "sb/trace_engine.hpp"

namespace sb {

// Wolkowicz-Styan extreme-eigenvalue bounds from trA and trB^2:
// lambda_min <= trA/n - sqrt(trB^2/(n(n-1))), lambda_max >= trA/n + same.
std::pair<Bound, Bound> ws_eigen_bounds(const CenteredTraces& t);

// Fourth-order refinement using trB^2 and trB^4. Degenerates to trA/n for a
// scalar matrix (flagged, not an error).
std::pair<Bound, Bound> thm31_eigen_bounds(const CenteredTraces& t);

// Condition-number lower bounds for positive definite matrices. Positive
// definiteness is the caller's hypothesis; only the formula's own
// denominator is checked.
Bound ws_condition_bound(const CenteredTraces& t);
Bound condition_bound_mgen4(const CenteredTraces& t);

// Lower bounds on the spread lambda_max - lambda_min. Four formulas, plus a
// fifth (mgen12) when n is odd. Each bound carries its formula_id.
std::vector<Bound> spread_bounds(const CenteredTraces& t);

// Spread lower bounds from a positive unital linear functional; also reports
// the refinement check that the mgen10 middle term dominates 6*sqrt(3)*phi(B^3).
std::vector<Bound> functional_spread_bounds(const FunctionalMoments& fm);

}  // namespace sb
