#pragma once

#include <cstdint>
#include <stdexcept>

namespace kernelhom {

// Exact binomial coefficient. Overflow-safe for the sizes this library
// handles (n <= 64 stays well inside uint64 for the k we ever request).
inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Integer power by repeated multiplication. Deterministic product order so
// that identical inputs give bitwise identical results.
inline double ipow(double x, unsigned e) {
    double r = 1.0;
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

inline std::uint64_t factorial(unsigned n) {
    if (n > 20) throw std::overflow_error("factorial: n > 20 overflows uint64");
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace kernelhom
