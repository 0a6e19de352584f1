#include "kernelhom/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kernelhom/numeric.hpp"
#include "kernelhom/rng.hpp"

namespace kernelhom {

double h_complete(int d, std::span<const double> xs) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    if (xs.empty()) throw std::invalid_argument("need at least one variable");
    // h[t] holds h_t of the variables processed so far; appending variable
    // x updates h_t += x * h_{t-1} in ascending t.
    std::vector<double> h(static_cast<std::size_t>(d) + 1, 0.0);
    h[0] = 1.0;
    for (double x : xs) {
        for (int t = 1; t <= d; ++t) h[t] += x * h[t - 1];
    }
    return h[d];
}

namespace {

double brute_sum(std::span<const double> xs, std::size_t index, int remaining) {
    if (index + 1 == xs.size()) return ipow(xs[index], remaining);
    double total = 0.0;
    for (int take = 0; take <= remaining; ++take) {
        total += ipow(xs[index], take) *
                 brute_sum(xs, index + 1, remaining - take);
    }
    return total;
}

}  // namespace

double h_bruteforce(int d, std::span<const double> xs) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    if (xs.empty()) throw std::invalid_argument("need at least one variable");
    const unsigned k = static_cast<unsigned>(xs.size());
    if (binomial(k + d - 1, d) > 10'000'000ull) {
        throw std::invalid_argument("h_bruteforce: too many compositions");
    }
    return brute_sum(xs, 0, d);
}

double h_scale(int d, std::span<const double> xs) {
    double mx = 1.0;
    for (double x : xs) mx = std::max(mx, std::abs(x));
    const unsigned k = static_cast<unsigned>(xs.size());
    return ipow(mx, 2 * d) *
           static_cast<double>(binomial(k + 2 * d - 1, 2 * d));
}

double schur_gap(int d, std::span<const double> xs) {
    if (d < 1) throw std::invalid_argument("degree parameter must be >= 1");
    if (xs.empty()) throw std::invalid_argument("need at least one variable");
    const unsigned k = static_cast<unsigned>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(k);
    double flat = static_cast<double>(binomial(k + 2 * d - 1, 2 * d)) *
                  ipow(mean, 2 * d);
    return h_complete(2 * d, xs) - flat;
}

bool majorizes(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("majorization needs equal lengths");
    }
    std::vector<double> a(xs.begin(), xs.end());
    std::vector<double> b(ys.begin(), ys.end());
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    double pa = 0.0, pb = 0.0;
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
        pa += a[j];
        pb += b[j];
        if (pa < pb - 1e-12) return false;
    }
    pa += a.back();
    pb += b.back();
    return std::abs(pa - pb) <= 1e-12;
}

MonteCarloEstimate monte_carlo_h(int d, std::span<const double> xs,
                                 std::int64_t samples, std::uint64_t seed) {
    if (samples < 1000) throw std::invalid_argument("need at least 1e3 samples");
    if (d < 1) throw std::invalid_argument("degree parameter must be >= 1");
    const double inv_fact = 1.0 / static_cast<double>(factorial(2 * d));
    constexpr std::int64_t kBatch = 1 << 16;

    double sum = 0.0;
    double sum_sq = 0.0;
    std::int64_t produced = 0;
    for (std::int64_t batch = 0; produced < samples; ++batch) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(batch)));
        const std::int64_t want = std::min(kBatch, samples - produced);
        double bsum = 0.0, bsq = 0.0;
        for (std::int64_t s = 0; s < want; ++s) {
            double dot = 0.0;
            for (double x : xs) dot += x * rng.exponential();
            double value = ipow(dot, 2 * d) * inv_fact;
            bsum += value;
            bsq += value * value;
        }
        sum += bsum;
        sum_sq += bsq;
        produced += want;
    }

    MonteCarloEstimate out;
    out.samples = samples;
    const double n = static_cast<double>(samples);
    out.estimate = sum / n;
    double variance = std::max(0.0, (sum_sq / n - out.estimate * out.estimate) *
                                        n / (n - 1.0));
    out.stderr_ = std::sqrt(variance / n);
    return out;
}

}  // namespace kernelhom
