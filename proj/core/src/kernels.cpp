#include "kernelhom/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kernelhom/rng.hpp"

namespace kernelhom {

namespace {

constexpr double kSymmetryTol = 1e-9;
constexpr double kMeasureSumTol = 1e-12;

}  // namespace

StepKernel::StepKernel(int n, std::vector<double> matrix,
                       std::vector<double> measures)
    : n_(n), matrix_(std::move(matrix)), measures_(std::move(measures)) {
    bound_ = 0.0;
    for (double v : matrix_) bound_ = std::max(bound_, std::abs(v));
}

StepKernel StepKernel::from_blocks(std::vector<std::vector<double>> matrix,
                                   std::vector<double> measures) {
    const int n = static_cast<int>(matrix.size());
    if (n < 1) throw std::invalid_argument("kernel needs at least one block");
    if (static_cast<int>(measures.size()) != n) {
        throw std::invalid_argument("measures size must match block count");
    }
    std::vector<double> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(matrix[i].size()) != n) {
            throw std::invalid_argument("matrix must be square");
        }
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(matrix[i][j])) {
                throw std::invalid_argument("non-finite matrix entry");
            }
            flat[i * n + j] = matrix[i][j];
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double a = flat[i * n + j], b = flat[j * n + i];
            if (std::abs(a - b) > kSymmetryTol) {
                throw std::invalid_argument("matrix asymmetric beyond 1e-9");
            }
            double avg = 0.5 * (a + b);
            flat[i * n + j] = flat[j * n + i] = avg;
        }
    }
    double sum = 0.0;
    for (double mu : measures) {
        if (!(mu > 0.0) || !std::isfinite(mu)) {
            throw std::invalid_argument("measures must be strictly positive");
        }
        sum += mu;
    }
    if (std::abs(sum - 1.0) > kMeasureSumTol) {
        throw std::invalid_argument("measures must sum to 1 within 1e-12");
    }
    return StepKernel(n, std::move(flat), std::move(measures));
}

StepKernel StepKernel::constant(double c) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite constant");
    return StepKernel(1, {c}, {1.0});
}

bool StepKernel::is_graphon() const {
    for (double v : matrix_) {
        if (v < 0.0 || v > 1.0) return false;
    }
    return true;
}

StepKernel StepKernel::map_entries(double scale, double shift) const {
    std::vector<double> out(matrix_.size());
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        out[i] = scale * matrix_[i] + shift;
    }
    return StepKernel(n_, std::move(out), measures_);
}

StepKernel StepKernel::complement() const { return map_entries(-1.0, 1.0); }
StepKernel StepKernel::to_signed() const { return map_entries(2.0, -1.0); }
StepKernel StepKernel::negate() const { return map_entries(-1.0, 0.0); }

std::string StepKernel::fingerprint() const {
    // FNV-1a over the raw double bits of measures then matrix.
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](double v) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(v));
        std::memcpy(&bits, &v, sizeof(bits));
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    for (double mu : measures_) mix(mu);
    for (double v : matrix_) mix(v);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string(buf);
}

double edge_density(const StepKernel& kernel) {
    const int n = kernel.block_count();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            row += kernel.measure(j) * kernel.value(i, j);
        }
        total += kernel.measure(i) * row;
    }
    return total;
}

namespace {

std::vector<double> dirichlet_measures(int n, Rng& rng) {
    std::vector<double> mu(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        mu[i] = rng.exponential();
        sum += mu[i];
    }
    double acc = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        mu[i] /= sum;
        acc += mu[i];
    }
    mu[n - 1] = 1.0 - acc;  // exact unit total
    return mu;
}

StepKernel random_step(int n, std::uint64_t seed, double lo, double hi) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    Rng rng(seed);
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            m[i][j] = m[j][i] = rng.uniform(lo, hi);
        }
    }
    return StepKernel::from_blocks(std::move(m), dirichlet_measures(n, rng));
}

}  // namespace

StepKernel random_graphon(int n, std::uint64_t seed) {
    return random_step(n, seed, 0.0, 1.0);
}

StepKernel random_kernel(int n, double bound, std::uint64_t seed) {
    if (!(bound > 0.0)) throw std::invalid_argument("bound must be positive");
    return random_step(n, seed, -bound, bound);
}

StepKernel kernel_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad kernel JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("kernel JSON must be an object");
    for (auto& [key, _] : j.items()) {
        if (key != "n" && key != "measures" && key != "matrix") {
            throw std::invalid_argument("unknown kernel field: " + key);
        }
    }
    if (!j.contains("n") || !j.contains("measures") || !j.contains("matrix")) {
        throw std::invalid_argument("kernel JSON needs n, measures, matrix");
    }
    int n = 0;
    std::vector<double> measures;
    std::vector<std::vector<double>> matrix;
    try {
        n = j.at("n").get<int>();
        measures = j.at("measures").get<std::vector<double>>();
        matrix = j.at("matrix").get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad kernel JSON: ") +
                                    e.what());
    }
    if (static_cast<int>(measures.size()) != n ||
        static_cast<int>(matrix.size()) != n) {
        throw std::invalid_argument("kernel JSON dimensions disagree with n");
    }
    return StepKernel::from_blocks(std::move(matrix), std::move(measures));
}

std::string kernel_to_json(const StepKernel& kernel) {
    nlohmann::json j;
    j["n"] = kernel.block_count();
    j["measures"] = kernel.measures();
    std::vector<std::vector<double>> rows(kernel.block_count());
    for (int i = 0; i < kernel.block_count(); ++i) {
        for (int k = 0; k < kernel.block_count(); ++k) {
            rows[i].push_back(kernel.value(i, k));
        }
    }
    j["matrix"] = rows;
    return j.dump();
}

StepKernel load_kernel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open kernel file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return kernel_from_json(buf.str());
}

std::string kernel_to_csv(const StepKernel& kernel) {
    std::ostringstream out;
    out.precision(17);
    const int n = kernel.block_count();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ',';
            out << kernel.value(i, j);
        }
        out << '\n';
    }
    for (int i = 0; i < n; ++i) {
        if (i) out << ',';
        out << kernel.measure(i);
    }
    out << '\n';
    return out.str();
}

}  // namespace kernelhom
