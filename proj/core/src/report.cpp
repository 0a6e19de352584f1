#include "kernelhom/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace kernelhom {

VerdictReport inequality_verdict(std::string claim_id, double lhs, double rhs,
                                 double tolerance, VerdictContext context) {
    VerdictReport r;
    r.claim_id = std::move(claim_id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = lhs - rhs;
    r.tolerance = tolerance;
    r.pass = r.slack >= -tolerance;
    r.context = std::move(context);
    return r;
}

VerdictReport identity_verdict(std::string claim_id, double lhs, double rhs,
                               double tolerance, VerdictContext context) {
    VerdictReport r;
    r.claim_id = std::move(claim_id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = -std::abs(lhs - rhs);
    r.tolerance = tolerance;
    r.pass = r.slack >= -tolerance;
    r.context = std::move(context);
    return r;
}

namespace {

nlohmann::json report_to_json_obj(const VerdictReport& r) {
    nlohmann::json j;
    j["claim_id"] = r.claim_id;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    nlohmann::json ctx;
    ctx["graph"] = r.context.graph;
    ctx["kernel"] = r.context.kernel;
    ctx["seed"] = r.context.seed;
    ctx["trial"] = r.context.trial;
    if (!r.context.extra.empty()) ctx["extra"] = r.context.extra;
    j["context"] = ctx;
    return j;
}

}  // namespace

std::string reports_to_json(const std::vector<VerdictReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json_obj(r));
    return arr.dump(2);
}

std::string reports_to_csv(const std::vector<VerdictReport>& reports) {
    std::ostringstream out;
    out.precision(17);
    out << "claim_id,graph,lhs,rhs,slack,pass,seed,trial\n";
    for (const auto& r : reports) {
        out << r.claim_id << ',' << r.context.graph << ',' << r.lhs << ','
            << r.rhs << ',' << r.slack << ',' << (r.pass ? "true" : "false")
            << ',' << r.context.seed << ',' << r.context.trial << '\n';
    }
    return out.str();
}

}  // namespace kernelhom
