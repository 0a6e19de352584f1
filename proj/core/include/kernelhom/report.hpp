#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kernelhom {

// Where a verdict came from: graph descriptor, kernel fingerprint, and the
// seed/trial pair when produced by a scan. `extra` carries named
// intermediate quantities (cross-route values, chain links).
struct VerdictContext {
    std::string graph;
    std::string kernel;
    std::uint64_t seed = 0;
    std::int64_t trial = -1;
    std::map<std::string, double> extra;
};

// One checked claim instance. pass <=> slack >= -tolerance.
// Inequality claims use slack = lhs - rhs; two-sided identity claims use
// slack = -|lhs - rhs| so the same pass rule covers both orientations.
struct VerdictReport {
    std::string claim_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    VerdictContext context;
};

VerdictReport inequality_verdict(std::string claim_id, double lhs, double rhs,
                                 double tolerance, VerdictContext context = {});
VerdictReport identity_verdict(std::string claim_id, double lhs, double rhs,
                               double tolerance, VerdictContext context = {});

// JSON array of report objects.
std::string reports_to_json(const std::vector<VerdictReport>& reports);

// Columns: claim_id, graph, lhs, rhs, slack, pass, seed, trial.
std::string reports_to_csv(const std::vector<VerdictReport>& reports);

}  // namespace kernelhom
