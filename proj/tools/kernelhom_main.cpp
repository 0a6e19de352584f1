// kernelhom: compute step-kernel densities and check the path/cycle
// inequality suite from the command line.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kernelhom/claims.hpp"
#include "kernelhom/densities.hpp"
#include "kernelhom/graphs.hpp"
#include "kernelhom/kernels.hpp"
#include "kernelhom/report.hpp"
#include "kernelhom/spectral.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;

bool all_pass(const std::vector<kernelhom::VerdictReport>& reports) {
    for (const auto& r : reports) {
        if (!r.pass) return false;
    }
    return true;
}

int cmd_verify(const std::string& graph_text, const std::string& kernel_path,
               const std::string& claim_text, double tolerance,
               const std::string& format) {
    const kernelhom::Graph h = kernelhom::parse_graph(graph_text);
    const kernelhom::StepKernel kernel =
        kernelhom::load_kernel_file(kernel_path);
    const kernelhom::ClaimSpec claim = kernelhom::parse_claim(claim_text);
    const std::vector<kernelhom::VerdictReport> reports =
        kernelhom::run_claim(claim, h, kernel, tolerance);
    if (format == "csv") {
        std::cout << kernelhom::reports_to_csv(reports);
    } else {
        std::cout << kernelhom::reports_to_json(reports) << "\n";
    }
    return all_pass(reports) ? kExitPass : kExitVerdictFailure;
}

int cmd_scan(const kernelhom::ScanOptions& options, const std::string& format) {
    const kernelhom::ScanSummary summary = kernelhom::run_scan(options);
    if (format == "csv") {
        std::cout << kernelhom::scan_to_csv(summary);
    } else {
        std::cout << kernelhom::scan_to_json(summary) << "\n";
    }
    return summary.failure_count == 0 ? kExitPass : kExitVerdictFailure;
}

int cmd_spectrum(const std::string& kernel_path, const std::string& format) {
    const kernelhom::StepKernel kernel =
        kernelhom::load_kernel_file(kernel_path);
    const kernelhom::Spectrum spectrum = kernelhom::decompose(kernel);
    if (format == "csv") {
        std::ostringstream out;
        out.precision(17);
        out << "eigenvalue,weight\n";
        for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
            out << spectrum.eigenvalues[i] << ',' << spectrum.weights[i]
                << '\n';
        }
        out << "residual," << spectrum.residual << "\n\n";
        out << "m,moment,path_density\n";
        for (int m = 0; m <= 10; ++m) {
            out << m << ',' << kernelhom::moment(spectrum, m) << ','
                << kernelhom::t_path_fast(m, kernel) << '\n';
        }
        std::cout << out.str();
    } else {
        nlohmann::json j;
        j["spectrum"] = nlohmann::json::parse(spectrum.to_json());
        nlohmann::json table = nlohmann::json::array();
        for (int m = 0; m <= 10; ++m) {
            nlohmann::json row;
            row["m"] = m;
            row["moment"] = kernelhom::moment(spectrum, m);
            row["path_density"] = kernelhom::t_path_fast(m, kernel);
            table.push_back(row);
        }
        j["moments"] = table;
        std::cout << j.dump(2) << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Step-kernel homomorphism densities and inequality checks"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    double tolerance = 1e-9;
    app.add_option("--tol", tolerance, "Slack tolerance")
        ->envname("KERNELHOM_TOL")
        ->capture_default_str();

    // Let --format/--tol appear after a subcommand name too.
    app.fallthrough();

    auto* verify = app.add_subcommand("verify", "Check one claim on a kernel");
    std::string graph_text;
    std::string kernel_path;
    std::string claim_text;
    verify->add_option("--graph", graph_text, "path:m | cycle:m | k2")
        ->required();
    verify->add_option("--kernel", kernel_path, "Kernel JSON file")
        ->required();
    verify->add_option("--claim", claim_text,
                       "main | common | nonneg | qmd:m:d | even-cycle:m | "
                       "stability-common | stability-main | identities | all")
        ->required();

    auto* scan = app.add_subcommand("scan", "Check a claim on random kernels");
    kernelhom::ScanOptions options;
    scan->add_option("--graph", options.graph, "path:m | cycle:m | k2")
        ->required();
    scan->add_option("--claim", options.claim, "Claim selector, as in verify")
        ->required();
    scan->add_option("--trials", options.trials, "Number of random kernels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scan->add_option("--n", options.block_count, "Blocks per kernel")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scan->add_option("--seed", options.seed, "Master seed")
        ->capture_default_str();
    scan->add_flag("--signed", options.signed_kernels,
                   "Draw signed kernels instead of graphons");
    scan->add_option("--bound", options.bound, "Value bound for --signed")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* spectrum = app.add_subcommand(
        "spectrum", "Print eigenvalues, weights, and the moment table");
    std::string spectrum_kernel;
    spectrum->add_option("--kernel", spectrum_kernel, "Kernel JSON file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        options.tolerance = tolerance;
        if (verify->parsed()) {
            return cmd_verify(graph_text, kernel_path, claim_text, tolerance,
                              format);
        }
        if (scan->parsed()) {
            return cmd_scan(options, format);
        }
        return cmd_spectrum(spectrum_kernel, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return kExitUsage;
    }
}
