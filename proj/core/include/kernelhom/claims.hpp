#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kernelhom/graphs.hpp"
#include "kernelhom/kernels.hpp"
#include "kernelhom/report.hpp"

namespace kernelhom {

// A claim selector as typed on the command line. `m` and `d` are only
// meaningful for the parameterised selectors (qmd:m:d, even-cycle:m).
struct ClaimSpec {
    std::string id;
    int m = 0;
    int d = 0;
};

// Accepts: main | common | nonneg | qmd:m:d | even-cycle:m |
// stability-common | stability-main | identities | all.
// Throws std::invalid_argument on anything else.
ClaimSpec parse_claim(const std::string& text);

// Runs the selected verifier(s) against one (graph, kernel) pair and
// returns every verdict produced. The kernel plays the role each claim
// expects: main/common/identities/stability read it as the graphon-side
// kernel W, nonneg and the q_{m,d} claims read it directly as U.
// Throws std::invalid_argument when the claim does not apply to the
// graph (e.g. stability on a single edge, even-cycle with odd length).
std::vector<VerdictReport> run_claim(const ClaimSpec& claim, const Graph& h,
                                     const StepKernel& kernel,
                                     double tolerance);

struct ScanOptions {
    std::string graph;
    std::string claim;
    int trials = 100;
    int block_count = 3;
    std::uint64_t seed = 0;
    bool signed_kernels = false;
    double bound = 1.0;
    double tolerance = 1e-9;
};

// Aggregate over all verdicts of all trials. argmin_* locate the single
// worst slack; failing reports are kept verbatim for triage.
struct ScanSummary {
    ScanOptions options;
    int verdict_count = 0;
    int failure_count = 0;
    double min_slack = 0.0;
    std::string argmin_claim_id;
    std::uint64_t argmin_seed = 0;
    std::int64_t argmin_trial = -1;
    std::vector<VerdictReport> failing;
};

// Trial i draws its kernel from derive_seed(options.seed, i), so any
// single trial can be replayed in isolation. Trials run in order; the
// summary is byte-stable for a fixed option set.
ScanSummary run_scan(const ScanOptions& options);

std::string scan_to_json(const ScanSummary& summary);
std::string scan_to_csv(const ScanSummary& summary);

}  // namespace kernelhom
