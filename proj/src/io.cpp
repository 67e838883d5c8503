#include "sb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sb::io {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse(const std::string& text, const std::string& path) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON in " + path);
    return j;
}

std::vector<double> number_list(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw InputError(what + " must be a nonempty array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw InputError(what + " must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<std::string> note_list(const json& j) {
    std::vector<std::string> notes;
    if (j.contains("notes"))
        for (const auto& n : j.at("notes")) notes.push_back(n.get<std::string>());
    return notes;
}

SampleInput parse_csv_sample(const std::string& text) {
    SampleInput s;
    std::vector<double> weights;
    bool any_weight = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::string cell;
        if (!std::getline(row, cell, ',')) throw InputError("bad CSV row: " + line);
        try {
            s.values.push_back(std::stod(cell));
            if (std::getline(row, cell, ',')) {
                weights.push_back(std::stod(cell));
                any_weight = true;
            } else {
                weights.push_back(-1.0);
            }
        } catch (const std::exception&) {
            throw InputError("bad CSV number in row: " + line);
        }
    }
    if (s.values.empty()) throw InputError("CSV sample is empty");
    if (any_weight) {
        for (double w : weights)
            if (w < 0.0) throw InputError("CSV weight column must be present on every row");
        s.weights = std::move(weights);
    }
    return s;
}

}  // namespace

SampleInput load_sample(const std::string& path) {
    const std::string text = slurp(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const json j = parse(text, path);
        SampleInput s;
        if (!j.contains("values")) throw InputError("sample JSON needs a \"values\" array");
        s.values = number_list(j.at("values"), "values");
        if (j.contains("weights")) s.weights = number_list(j.at("weights"), "weights");
        s.notes = note_list(j);
        return s;
    }
    return parse_csv_sample(text);
}

MatrixInput load_matrix(const std::string& path) {
    const json j = parse(slurp(path), path);
    MatrixInput m;
    m.notes = note_list(j);
    if (j.contains("eigenvalues")) {
        m.spectrum = number_list(j.at("eigenvalues"), "eigenvalues");
        return m;
    }
    if (!j.contains("entries")) throw InputError("matrix JSON needs \"entries\" or \"eigenvalues\"");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.empty()) throw InputError("entries must be a nonempty array");

    if (j.contains("n")) {
        const int n = j.at("n").get<int>();
        if (n < 1) throw InputError("matrix order must be >= 1");
        if (entries.size() != static_cast<std::size_t>(n) * n)
            throw InputError("entries length must be n*n");
        std::vector<SquareMatrix::cplx> e;
        e.reserve(entries.size());
        for (const auto& z : entries) {
            if (z.is_number()) {
                e.emplace_back(z.get<double>(), 0.0);
            } else if (z.is_array() && z.size() == 2) {
                e.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
            } else {
                throw InputError("complex entries must be [re, im] pairs");
            }
        }
        m.matrix = SquareMatrix(n, std::move(e));
        return m;
    }
    // Real row shorthand: entries is a list of rows.
    const int n = static_cast<int>(entries.size());
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : entries) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError("real matrix rows must all have length n");
        for (const auto& v : row) flat.push_back(v.get<double>());
    }
    m.matrix = SquareMatrix::from_real(n, flat);
    return m;
}

PolynomialInput load_polynomial(const std::string& path) {
    const json j = parse(slurp(path), path);
    if (j.contains("coefficients")) {
        auto coeffs = number_list(j.at("coefficients"), "coefficients");
        if (coeffs.front() != 1.0) throw InputError("polynomial must be monic");
        std::optional<std::vector<double>> roots;
        if (j.contains("roots")) roots = number_list(j.at("roots"), "roots");
        return PolynomialInput{Polynomial(std::move(coeffs)), std::move(roots), note_list(j)};
    }
    if (j.contains("roots")) {
        auto roots = number_list(j.at("roots"), "roots");
        return PolynomialInput{Polynomial::from_roots(roots), std::move(roots), note_list(j)};
    }
    throw InputError("polynomial JSON needs \"coefficients\" or \"roots\"");
}

DensityFunctional load_functional(const std::string& path) {
    auto m = load_matrix(path);
    if (!m.matrix) throw InputError("functional weight must be a matrix, not a spectrum");
    return DensityFunctional(std::move(*m.matrix));
}

}  // namespace sb::io
