#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace kernelhom {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Per-index seed derivation: trial i of a scan is reproducible in isolation
// without generating trials 0..i-1.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + index * 0x9E3779B97F4A7C15ull);
}

// Deterministic random source. std::mt19937_64 output is pinned by the
// standard; the double conversions below avoid std::*_distribution, whose
// algorithms are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [0, 1).
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1), never returns an endpoint.
    double uniform_open01() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Exp(1) deviate, strictly positive.
    double exponential() {
        return -std::log(uniform_open01());
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace kernelhom
