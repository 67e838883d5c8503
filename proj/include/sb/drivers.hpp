#pragma once

#include <optional>

#include "sb/io.hpp"
#include "sb/report.hpp"

namespace sb {

/// Report assembly shared by the CLI and the tests. These take parsed inputs
/// and produce fully evaluated reports; file handling and exit codes live in
/// the CLI.

Report build_sample_report(const io::SampleInput& input,
                           std::optional<SupportInterval> interval = std::nullopt);

struct MatrixReportOptions {
    bool with_oracle = false;
    std::optional<DensityFunctional> functional;
};

Report build_matrix_report(const io::MatrixInput& input, const MatrixReportOptions& opts = {});

Report build_poly_report(const io::PolynomialInput& input);

}  // namespace sb
