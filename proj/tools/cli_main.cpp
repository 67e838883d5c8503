#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sb/drivers.hpp"

namespace {

struct OutputFlags {
    bool json = false;
    bool paper_mode = false;

    [[nodiscard]] sb::RenderMode mode() const {
        if (json) return sb::RenderMode::Json;
        if (paper_mode) return sb::RenderMode::PaperComparison;
        return sb::RenderMode::Text;
    }
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
    cmd->add_flag("--json", flags.json, "machine-readable output, full double precision");
    cmd->add_flag("--paper-mode", flags.paper_mode,
                  "round bound values to 4 decimals for comparison against published values");
}

int emit(const sb::Report& rep, const OutputFlags& flags) {
    std::cout << sb::render(rep, flags.mode());
    return rep.any_violation() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moment, eigenvalue-spread, and polynomial-span bound estimation"};
    app.require_subcommand(1);

    std::string input_path;
    std::string functional_path;
    std::string fixtures_dir = "fixtures";
    std::vector<double> interval_args;
    bool with_oracle = false;
    OutputFlags flags;

    auto* moments = app.add_subcommand("moments", "central-moment inequality suite for a sample");
    moments->add_option("input", input_path, "sample JSON or CSV")->required();
    moments->add_option("--interval", interval_args, "override support interval m M")
        ->expected(2);
    add_output_flags(moments, flags);

    auto* matrix = app.add_subcommand("matrix", "trace-only eigenvalue and spread bounds");
    matrix->add_option("input", input_path, "matrix or spectrum JSON")->required();
    matrix->add_option("--functional", functional_path, "density weight matrix JSON");
    matrix->add_flag("--with-oracle", with_oracle,
                     "check bounds against Jacobi eigenvalues (Hermitian input only)");
    add_output_flags(matrix, flags);

    auto* poly = app.add_subcommand("poly", "coefficient-only root and span bounds");
    poly->add_option("input", input_path, "polynomial JSON")->required();
    add_output_flags(poly, flags);

    auto* suite = app.add_subcommand("suite", "run every bundled fixture");
    suite->add_option("--fixtures", fixtures_dir, "fixtures directory (default: fixtures)");
    add_output_flags(suite, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (moments->parsed()) {
            std::optional<sb::SupportInterval> iv;
            if (!interval_args.empty())
                iv = sb::SupportInterval(interval_args[0], interval_args[1]);
            return emit(sb::build_sample_report(sb::io::load_sample(input_path), iv), flags);
        }
        if (matrix->parsed()) {
            sb::MatrixReportOptions opts;
            opts.with_oracle = with_oracle;
            if (!functional_path.empty())
                opts.functional = sb::io::load_functional(functional_path);
            return emit(sb::build_matrix_report(sb::io::load_matrix(input_path), opts), flags);
        }
        if (poly->parsed()) {
            return emit(sb::build_poly_report(sb::io::load_polynomial(input_path)), flags);
        }
        // suite: fixed fixture order so output is reproducible byte for byte.
        int worst = 0;
        const std::string dir = fixtures_dir + "/";
        for (const char* name : {"sample_third_weight.json", "sample_three_zeros_one.json",
                                 "sample_mge16_equality.json"}) {
            auto rep = sb::build_sample_report(sb::io::load_sample(dir + name));
            std::cout << "== " << name << " ==\n";
            worst = std::max(worst, emit(rep, flags));
        }
        {
            sb::MatrixReportOptions opts;
            opts.with_oracle = true;
            auto rep = sb::build_matrix_report(sb::io::load_matrix(dir + "a1.json"), opts);
            std::cout << "== a1.json ==\n";
            worst = std::max(worst, emit(rep, flags));
        }
        for (const char* name : {"a2_spectrum.json", "a3_spectrum.json"}) {
            auto rep = sb::build_matrix_report(sb::io::load_matrix(dir + name), {});
            std::cout << "== " << name << " ==\n";
            worst = std::max(worst, emit(rep, flags));
        }
        for (const char* name : {"poly_quartic.json", "poly_nonic.json"}) {
            auto rep = sb::build_poly_report(sb::io::load_polynomial(dir + name));
            std::cout << "== " << name << " ==\n";
            worst = std::max(worst, emit(rep, flags));
        }
        return worst;
    } catch (const sb::BoundsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
