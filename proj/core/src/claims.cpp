#include "kernelhom/claims.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "kernelhom/numeric.hpp"
#include "kernelhom/rng.hpp"
#include "kernelhom/spectral.hpp"
#include "kernelhom/symfun.hpp"
#include "kernelhom/verify.hpp"

namespace kernelhom {

namespace {

int parse_positive_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + ": " + text);
    }
    if (used != text.size() || value <= 0) {
        throw std::invalid_argument("bad " + what + ": " + text);
    }
    return value;
}

// Route-equivalence cross-check for q_{m,d}: the subgraph enumeration and
// the spectral-moment expansion must agree.
VerdictReport qmd_route_identity(int m, int d, const StepKernel& u) {
    const double tol =
        1e-8 * std::max(1.0, ipow(u.bound(), static_cast<unsigned>(m)));
    VerdictContext ctx;
    ctx.graph = "path:" + std::to_string(m);
    ctx.kernel = u.fingerprint();
    ctx.extra["d"] = d;
    return identity_verdict("qmd-routes", qmd_via_subgraphs(m, d, u),
                            qmd_via_moments(m, d, u), tol, std::move(ctx));
}

void append(std::vector<VerdictReport>& out, VerdictReport r) {
    out.push_back(std::move(r));
}

void append(std::vector<VerdictReport>& out, std::vector<VerdictReport> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
}

void run_qmd(std::vector<VerdictReport>& out, int m, int d,
             const StepKernel& u, double tolerance) {
    append(out, verify_main_ineq(m, d, u, tolerance));
    append(out, verify_qmd_nonneg(m, d, u, tolerance));
    append(out, qmd_route_identity(m, d, u));
}

}  // namespace

ClaimSpec parse_claim(const std::string& text) {
    ClaimSpec spec;
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    if (colon == std::string::npos) {
        if (head != "main" && head != "common" && head != "nonneg" &&
            head != "stability-common" && head != "stability-main" &&
            head != "identities" && head != "all") {
            throw std::invalid_argument("unknown claim: " + text);
        }
        spec.id = head;
        return spec;
    }
    const std::string tail = text.substr(colon + 1);
    if (head == "even-cycle") {
        spec.id = head;
        spec.m = parse_positive_int(tail, "cycle length");
        if (spec.m % 2 != 0) {
            throw std::invalid_argument("even-cycle needs an even length");
        }
        return spec;
    }
    if (head == "qmd") {
        const auto second = tail.find(':');
        if (second == std::string::npos) {
            throw std::invalid_argument("qmd needs the form qmd:m:d");
        }
        spec.id = head;
        spec.m = parse_positive_int(tail.substr(0, second), "path length");
        spec.d = parse_positive_int(tail.substr(second + 1), "qmd degree");
        if (spec.m > 16 || 2 * spec.d > spec.m) {
            throw std::invalid_argument("qmd needs 1 <= d <= m/2, m <= 16");
        }
        return spec;
    }
    throw std::invalid_argument("unknown claim: " + text);
}

std::vector<VerdictReport> run_claim(const ClaimSpec& claim, const Graph& h,
                                     const StepKernel& kernel,
                                     double tolerance) {
    std::vector<VerdictReport> out;
    if (claim.id == "main") {
        append(out, verify_main(h, kernel, tolerance));
    } else if (claim.id == "common") {
        append(out, verify_common(h, kernel, tolerance));
    } else if (claim.id == "nonneg") {
        append(out, verify_nonneg_decomposition(h, kernel, tolerance));
    } else if (claim.id == "identities") {
        auto pair = expansion_identities(h, kernel, tolerance);
        append(out, std::move(pair.first));
        append(out, std::move(pair.second));
    } else if (claim.id == "stability-common") {
        append(out, stability_common(h, kernel, tolerance));
    } else if (claim.id == "stability-main") {
        append(out, stability_main(h, kernel, tolerance));
    } else if (claim.id == "qmd") {
        run_qmd(out, claim.m, claim.d, kernel, tolerance);
    } else if (claim.id == "even-cycle") {
        append(out, even_cycle_check(kernel, claim.m, tolerance));
    } else if (claim.id == "all") {
        const int e = h.edge_count();
        append(out, verify_main(h, kernel, tolerance));
        append(out, verify_common(h, kernel, tolerance));
        auto pair = expansion_identities(h, kernel, tolerance);
        append(out, std::move(pair.first));
        append(out, std::move(pair.second));
        if (e <= 16) {
            append(out, verify_nonneg_decomposition(h, kernel, tolerance));
        }
        if (e >= 2) {
            append(out, stability_common(h, kernel, tolerance));
            append(out, stability_main(h, kernel, tolerance));
        }
        if (h.kind() == GraphKind::path && e >= 2 && e <= 16) {
            for (int d = 1; 2 * d <= e; ++d) {
                run_qmd(out, e, d, kernel, tolerance);
            }
        }
        if (h.kind() == GraphKind::cycle && e % 2 == 0) {
            append(out, even_cycle_check(kernel, e, tolerance));
        }
    } else {
        throw std::invalid_argument("unknown claim: " + claim.id);
    }
    return out;
}

ScanSummary run_scan(const ScanOptions& options) {
    if (options.trials < 1) {
        throw std::invalid_argument("need trials >= 1");
    }
    const Graph h = parse_graph(options.graph);
    const ClaimSpec claim = parse_claim(options.claim);

    ScanSummary summary;
    summary.options = options;
    summary.min_slack = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < options.trials; ++trial) {
        const std::uint64_t trial_seed = derive_seed(options.seed,
                                                     static_cast<std::uint64_t>(trial));
        const StepKernel kernel =
            options.signed_kernels
                ? random_kernel(options.block_count, options.bound, trial_seed)
                : random_graphon(options.block_count, trial_seed);
        std::vector<VerdictReport> reports =
            run_claim(claim, h, kernel, options.tolerance);
        for (VerdictReport& r : reports) {
            r.context.seed = trial_seed;
            r.context.trial = trial;
            summary.verdict_count += 1;
            if (!r.pass) summary.failure_count += 1;
            if (r.slack < summary.min_slack) {
                summary.min_slack = r.slack;
                summary.argmin_claim_id = r.claim_id;
                summary.argmin_seed = trial_seed;
                summary.argmin_trial = trial;
            }
            if (!r.pass) summary.failing.push_back(std::move(r));
        }
    }
    return summary;
}

std::string scan_to_json(const ScanSummary& summary) {
    nlohmann::json j;
    j["graph"] = summary.options.graph;
    j["claim"] = summary.options.claim;
    j["trials"] = summary.options.trials;
    j["n"] = summary.options.block_count;
    j["seed"] = summary.options.seed;
    j["signed"] = summary.options.signed_kernels;
    j["bound"] = summary.options.bound;
    j["tolerance"] = summary.options.tolerance;
    j["verdicts"] = summary.verdict_count;
    j["failures"] = summary.failure_count;
    j["min_slack"] = summary.min_slack;
    nlohmann::json argmin;
    argmin["claim_id"] = summary.argmin_claim_id;
    argmin["seed"] = summary.argmin_seed;
    argmin["trial"] = summary.argmin_trial;
    j["argmin"] = argmin;
    j["failing"] = nlohmann::json::parse(reports_to_json(summary.failing));
    return j.dump(2);
}

std::string scan_to_csv(const ScanSummary& summary) {
    std::ostringstream out;
    out.precision(17);
    out << "graph,claim,trials,n,seed,signed,bound,verdicts,failures,"
           "min_slack,argmin_claim_id,argmin_seed,argmin_trial\n";
    out << summary.options.graph << ',' << summary.options.claim << ','
        << summary.options.trials << ',' << summary.options.block_count << ','
        << summary.options.seed << ','
        << (summary.options.signed_kernels ? "true" : "false") << ','
        << summary.options.bound << ',' << summary.verdict_count << ','
        << summary.failure_count << ',' << summary.min_slack << ','
        << summary.argmin_claim_id << ',' << summary.argmin_seed << ','
        << summary.argmin_trial << '\n';
    if (!summary.failing.empty()) out << reports_to_csv(summary.failing);
    return out.str();
}

}  // namespace kernelhom
