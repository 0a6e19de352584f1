#pragma once

#include <string>
#include <vector>

#include "kernelhom/kernels.hpp"
#include "kernelhom/report.hpp"

namespace kernelhom {

// The law of the discrete random variable attached to a step kernel: value
// eigenvalues[i] with probability weights[i], value 0 with the residual
// probability. Its m-th raw moment equals t_{P_m} of the kernel.
struct Spectrum {
    std::vector<double> eigenvalues;  // descending |lambda|
    std::vector<double> weights;      // nonnegative, aligned with eigenvalues
    double residual = 0.0;            // mass at 0
    double weight_sum_raw = 0.0;      // pre-clamp total weight, diagnostic

    // {"eigenvalues": [...], "weights": [...], "residual": r}
    std::string to_json() const;
};

// Eigendecomposition of D^{1/2} M D^{1/2} (D = diag of block measures),
// which shares its eigenvalues with M*D but is symmetric. The weight of
// eigenvector v is the squared projection of the constant function:
// (sum_j sqrt(mu_j) v_j)^2. Weights attached to eigenvalues below 1e-12 in
// magnitude are folded into the residual. Throws if the pre-clamp weight
// total exceeds 1 + 1e-9, which would signal a bug, not input error.
Spectrum decompose(const StepKernel& kernel);

// sum_i weights[i] * eigenvalues[i]^m, plus the residual when m = 0.
double moment(const Spectrum& spectrum, int m);

// Checks the chain t_{C_m}(U)^{1/m} >= |lambda_1| >= |t_{K_2}(U)| for even
// cycle length m, and with it t_{C_m}(U) >= t_{K_2}(U)^m. The verdict's
// lhs/rhs are the cycle density and the edge-density power; the chain
// quantities ride along in context.extra.
VerdictReport even_cycle_check(const StepKernel& kernel, int m,
                               double tolerance = 1e-9);

}  // namespace kernelhom
