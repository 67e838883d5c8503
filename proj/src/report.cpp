#include "sb/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace sb {

namespace {

std::string fmt(double v, RenderMode mode) {
    char buf[64];
    if (mode == RenderMode::PaperComparison)
        std::snprintf(buf, sizeof buf, "%.4f", v);
    else
        std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

const char* subject_name(Subject s) {
    switch (s) {
        case Subject::Sample: return "sample";
        case Subject::Matrix: return "matrix";
        case Subject::Spectrum: return "spectrum";
        case Subject::Polynomial: return "polynomial";
        case Subject::Functional: return "functional";
    }
    return "unknown";
}

std::string render(const Report& r, RenderMode mode) {
    if (mode == RenderMode::Json) {
        nlohmann::json j;
        j["subject"] = subject_name(r.subject);
        j["inputs"] = r.inputs_echo;
        auto& bounds = j["bounds"] = nlohmann::json::array();
        for (const auto& b : r.bounds) {
            nlohmann::json e;
            e["formula"] = b.formula_id;
            e["target"] = target_name(b.target);
            e["direction"] = direction_name(b.direction);
            e["value"] = b.value;
            if (b.has_slack()) {
                e["slack"] = b.slack;
                e["actual"] = b.actual();
                e["satisfied"] = b.satisfied();
            }
            if (b.degenerate) e["degenerate"] = true;
            if (!b.note.empty()) e["note"] = b.note;
            bounds.push_back(std::move(e));
        }
        j["diagnostics"] = r.diagnostics;
        j["erratum_flags"] = r.erratum_flags;
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "subject: " << subject_name(r.subject) << "\n";
    out << "inputs:  " << r.inputs_echo << "\n";
    for (const auto& b : r.bounds) {
        out << "  " << b.formula_id << ": " << target_name(b.target) << " "
            << (b.direction == Direction::Upper ? "<=" : ">=") << " " << fmt(b.value, mode);
        if (b.has_slack())
            out << "  [actual " << fmt(b.actual(), mode) << ", slack " << fmt(b.slack, mode)
                << (b.satisfied() ? ", ok" : ", VIOLATED") << "]";
        if (b.degenerate) out << "  (degenerate)";
        if (!b.note.empty()) out << "  -- " << b.note;
        out << "\n";
    }
    for (const auto& d : r.diagnostics) out << "  note: " << d << "\n";
    for (const auto& e : r.erratum_flags) out << "  erratum: " << e << "\n";
    return out.str();
}

}  // namespace sb
