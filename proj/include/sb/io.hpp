#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sb/poly_bounds.hpp"
#include "sb/sample_moments.hpp"
#include "sb/trace_engine.hpp"

namespace sb::io {

struct SampleInput {
    std::vector<double> values;
    std::optional<std::vector<double>> weights;  // absent means equal weights
    std::vector<std::string> notes;
};

struct MatrixInput {
    std::optional<SquareMatrix> matrix;
    std::optional<std::vector<double>> spectrum;  // known-spectrum fixture
    std::vector<std::string> notes;
};

struct PolynomialInput {
    Polynomial poly;
    std::optional<std::vector<double>> roots;  // present when built from roots
    std::vector<std::string> notes;
};

/// JSON {"values":[...], "weights":[...]} or CSV "value[,weight]" per line.
/// The format is detected from the leading non-space character.
SampleInput load_sample(const std::string& path);

/// {"n":k, "entries":[[re,im],...]} row-major complex, {"entries":[[...],...]}
/// real row shorthand, or {"eigenvalues":[...]} known-spectrum fixture.
MatrixInput load_matrix(const std::string& path);

/// {"coefficients":[1, ...]} highest degree first, or {"roots":[...]}.
PolynomialInput load_polynomial(const std::string& path);

/// Density weight matrix for a positive unital linear functional.
DensityFunctional load_functional(const std::string& path);

}  // namespace sb::io
