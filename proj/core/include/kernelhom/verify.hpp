#pragma once

#include <utility>
#include <vector>

#include "kernelhom/densities.hpp"
#include "kernelhom/graphs.hpp"
#include "kernelhom/kernels.hpp"
#include "kernelhom/report.hpp"

namespace kernelhom {

// Sum of t_F over the even spanning subgraphs of the m-edge path with
// exactly 2d edges, by direct mask enumeration and the multilinear density
// engine. Requires 1 <= d <= m/2 and m <= 16.
double qmd_via_subgraphs(int m, int d, const StepKernel& u);

// The same quantity through the spectral route: sum over compositions of
// 2d into m-2d+1 parts of the product of spectral moments. Independent of
// the subgraph route end to end; agreement within 1e-8 is the executable
// content of the composition bijection.
double qmd_via_moments(int m, int d, const StepKernel& u);

// qmd >= C(m,2d) * t_{K_2}(U)^{2d}. The moments-route value rides along in
// context.extra for cross-attribution.
VerdictReport verify_main_ineq(int m, int d, const StepKernel& u,
                               double tolerance = 1e-9);

// t_H(W) + t_H(1-W) >= t_{K_2}(W)^e + t_{K_2}(1-W)^e for paths and cycles.
VerdictReport verify_main(const Graph& h, const StepKernel& w,
                          double tolerance = 1e-9);

// t_H(W) + t_H(1-W) >= 2^{1-e}, the commonality bound.
VerdictReport verify_common(const Graph& h, const StepKernel& w,
                            double tolerance = 1e-9);

// The two multilinear expansion identities through U = 2W - 1, both
// two-sided: (a) the density sum against the even-subgraph expansion,
// (b) the edge-density power sum against its binomial expansion.
std::pair<VerdictReport, VerdictReport> expansion_identities(
    const Graph& h, const StepKernel& w, double tolerance = 1e-9);

// (i) sum over even subgraphs of t_F(U) - t_{K_2}(U)^{e(F)} is
// nonnegative; (ii) for cycles, the edge-deletion re-counting identity
// (with the whole-cycle extra term when e(H) is even) holds two-sided.
// Requires H path or cycle with e(H) <= 16.
std::vector<VerdictReport> verify_nonneg_decomposition(
    const Graph& h, const StepKernel& u, double tolerance = 1e-9);

// qmd >= 0, the weaker nonnegativity bound.
VerdictReport verify_qmd_nonneg(int m, int d, const StepKernel& u,
                                   double tolerance = 1e-9);

// If t_H(W) + t_H(1-W) <= 2^{1-e}(1 + eps) with the smallest admissible
// eps >= 0, then t_{P_2}(2W-1) <= eps / (e - 1). Requires e(H) >= 2.
VerdictReport stability_common(const Graph& h, const StepKernel& w,
                               double tolerance = 1e-9);

// Same shape against the main inequality: t_{P_2}(U) - t_{K_2}(U)^2 <=
// eps / (e - 1) where eps absorbs the main-inequality slack.
VerdictReport stability_main(const Graph& h, const StepKernel& w,
                             double tolerance = 1e-9);

// Block degree data of a kernel: d_i = sum_j mu_j M_ij, the variance
// t_{P_2}(U) - t_{K_2}(U)^2, and the tail measure of blocks with squared
// degree at least a threshold (Markov-style fraction).
struct DegreeProfile {
    std::vector<double> degrees;
    std::vector<double> measures;
    double variance = 0.0;
    double path2 = 0.0;  // t_{P_2}(U) = integral of d_U^2

    double markov_fraction(double threshold) const;
};

DegreeProfile degree_profile(const StepKernel& u);

}  // namespace kernelhom
