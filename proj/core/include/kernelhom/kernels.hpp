#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kernelhom {

// Symmetric step function on [0,1]^2: value matrix[i][j] on the block
// rectangle I_i x I_j, where block I_i has width measures[i]. A graphon is
// the special case with values in [0,1]. Immutable after construction.
class StepKernel {
public:
    // Validates, symmetrizes (tolerance 1e-9, then exact averaging), and
    // checks the measures are strictly positive and sum to 1 within 1e-12.
    static StepKernel from_blocks(std::vector<std::vector<double>> matrix,
                                  std::vector<double> measures);

    static StepKernel constant(double c);

    int block_count() const { return n_; }
    double value(int i, int j) const { return matrix_[i * n_ + j]; }
    const std::vector<double>& values_flat() const { return matrix_; }
    const std::vector<double>& measures() const { return measures_; }
    double measure(int i) const { return measures_[i]; }

    // max |entry|
    double bound() const { return bound_; }
    bool is_graphon() const;

    StepKernel complement() const;  // pointwise 1 - W
    StepKernel to_signed() const;   // pointwise 2W - 1
    StepKernel negate() const;      // pointwise -W

    // Short deterministic hash of the kernel contents, for report context.
    std::string fingerprint() const;

private:
    StepKernel(int n, std::vector<double> matrix, std::vector<double> measures);

    StepKernel map_entries(double scale, double shift) const;

    int n_;
    std::vector<double> matrix_;  // row-major n x n, exactly symmetric
    std::vector<double> measures_;
    double bound_;
};

// t_{K_2}: the double block sum  sum_{i,j} mu_i mu_j M_ij.
double edge_density(const StepKernel& kernel);

// Deterministic in (n, seed). Entries i.i.d. uniform [0,1] on the upper
// triangle then mirrored; measures are symmetric Dirichlet(1,...,1).
StepKernel random_graphon(int n, std::uint64_t seed);

// As above with entries uniform in [-bound, bound].
StepKernel random_kernel(int n, double bound, std::uint64_t seed);

// JSON object {"n": ..., "measures": [...], "matrix": [[...], ...]}.
// Unknown fields are rejected.
StepKernel kernel_from_json(const std::string& text);
std::string kernel_to_json(const StepKernel& kernel);
StepKernel load_kernel_file(const std::string& path);

// n rows of matrix values, then one row of measures.
std::string kernel_to_csv(const StepKernel& kernel);

}  // namespace kernelhom
