#pragma once

#include "kernelhom/graphs.hpp"
#include "kernelhom/kernels.hpp"

namespace kernelhom {

// Homomorphism density t_H(W) by direct summation over all maps from V(H)
// to kernel blocks. Exact step-function evaluation of the defining
// integral; the reference every fast route is checked against.
// Requires n^{v(H)} <= 1e8.
double t_hom_oracle(const Graph& h, const StepKernel& kernel);

// Density of a spanning subgraph: product of component densities, with
// isolated vertices contributing factor 1. Path and cycle components go
// through the fast routes below; anything else falls back to the oracle.
double t_subgraph(const SubgraphMask& mask, const StepKernel& kernel);

// t_{P_m} via m matrix-vector products, O(m n^2). m = 0 gives 1.
double t_path_fast(int m, const StepKernel& kernel);

// t_{C_m} = trace((M diag(mu))^m). Requires m >= 3.
double t_cycle_fast(int m, const StepKernel& kernel);

// Dispatches paths, cycles, and single edges to the fast routes and
// anything else to the oracle.
double t_density(const Graph& h, const StepKernel& kernel);

}  // namespace kernelhom
