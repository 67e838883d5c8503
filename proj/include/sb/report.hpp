#pragma once

#include <string>
#include <vector>

#include "sb/bound.hpp"

namespace sb {

enum class Subject { Sample, Matrix, Spectrum, Polynomial, Functional };

/// Render modes for the CLI: fixed 6 significant digits for text, 4 fixed
/// decimals for direct comparison against published values, full doubles
/// in JSON.
enum class RenderMode { Text, PaperComparison, Json };

struct Report {
    Subject subject = Subject::Sample;
    std::string inputs_echo;
    std::vector<Bound> bounds;
    std::vector<std::string> diagnostics;
    std::vector<std::string> erratum_flags;

    [[nodiscard]] bool any_violation(double rel_tol = 1e-9) const {
        for (const auto& b : bounds)
            if (b.has_slack() && !b.satisfied(rel_tol)) return true;
        return false;
    }
};

const char* subject_name(Subject s);
std::string render(const Report& report, RenderMode mode);

}  // namespace sb
