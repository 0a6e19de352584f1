#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace kernelhom {

// Complete homogeneous symmetric function h_d: the sum of all degree-d
// monomials in |xs| variables. O(d * |xs|) via the one-variable-at-a-time
// recurrence.
double h_complete(int d, std::span<const double> xs);

// Same value by direct enumeration of the compositions of d, independent
// of the recurrence. Requires C(|xs|+d-1, d) <= 1e7.
double h_bruteforce(int d, std::span<const double> xs);

// h_{2d}(xs) - C(k+2d-1, 2d) * mean(xs)^{2d}. Nonnegative up to float
// noise, zero exactly when all coordinates are equal.
double schur_gap(int d, std::span<const double> xs);

// Majorization in the standard convention: both tuples sorted descending,
// every prefix sum of xs at least that of ys, totals equal within 1e-12.
bool majorizes(std::span<const double> xs, std::span<const double> ys);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::int64_t samples = 0;
};

// Estimates h_{2d}(xs) as the mean of (sum_i xs[i] * Z_i)^{2d} / (2d)! over
// i.i.d. Exp(1) draws Z_i. Deterministic per seed; samples are generated in
// fixed-size batches with per-batch derived seeds and summed in order.
MonteCarloEstimate monte_carlo_h(int d, std::span<const double> xs,
                                 std::int64_t samples, std::uint64_t seed);

// Tolerance scale for h_{2d} comparisons: max(1, max|x|)^{2d} * C(k+2d-1, 2d).
double h_scale(int d, std::span<const double> xs);

}  // namespace kernelhom
