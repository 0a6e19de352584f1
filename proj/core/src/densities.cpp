#include "kernelhom/densities.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace kernelhom {

double t_hom_oracle(const Graph& h, const StepKernel& kernel) {
    const int v = h.vertex_count();
    const int n = kernel.block_count();
    if (v == 0) return 1.0;
    if (std::pow(static_cast<double>(n), v) > 1e8) {
        throw std::invalid_argument("t_hom_oracle: n^{v(H)} exceeds 1e8");
    }
    std::vector<int> assign(v, 0);
    double total = 0.0;
    while (true) {
        double term = 1.0;
        for (int i = 0; i < v; ++i) term *= kernel.measure(assign[i]);
        for (auto& [a, b] : h.edges()) {
            term *= kernel.value(assign[a], assign[b]);
        }
        total += term;
        int pos = v - 1;
        while (pos >= 0 && assign[pos] == n - 1) {
            assign[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++assign[pos];
    }
    return total;
}

double t_path_fast(int m, const StepKernel& kernel) {
    if (m < 0) throw std::invalid_argument("path length must be >= 0");
    const int n = kernel.block_count();
    std::vector<double> u(kernel.measures());
    std::vector<double> next(n);
    for (int step = 0; step < m; ++step) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += kernel.value(i, j) * u[j];
            next[i] = kernel.measure(i) * s;
        }
        u.swap(next);
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += u[i];
    return total;
}

namespace {

// C = A * B for row-major n x n matrices.
std::vector<double> mat_mul(const std::vector<double>& a,
                            const std::vector<double>& b, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            double aik = a[i * n + k];
            for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    }
    return c;
}

}  // namespace

double t_cycle_fast(int m, const StepKernel& kernel) {
    if (m < 3) throw std::invalid_argument("cycle length must be >= 3");
    const int n = kernel.block_count();
    std::vector<double> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            t[i * n + j] = kernel.value(i, j) * kernel.measure(j);
        }
    }
    std::vector<double> power = t;
    for (int step = 1; step < m; ++step) power = mat_mul(power, t, n);
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += power[i * n + i];
    return trace;
}

double t_density(const Graph& h, const StepKernel& kernel) {
    switch (h.kind()) {
        case GraphKind::path:
            return t_path_fast(h.edge_count(), kernel);
        case GraphKind::edge:
            return t_path_fast(1, kernel);
        case GraphKind::cycle:
            return t_cycle_fast(h.edge_count(), kernel);
        case GraphKind::generic:
            return t_hom_oracle(h, kernel);
    }
    throw std::logic_error("unreachable");
}

double t_subgraph(const SubgraphMask& mask, const StepKernel& kernel) {
    double product = 1.0;
    for (const Component& comp : connected_components(mask)) {
        if (comp.is_isolated_vertex()) continue;  // integrates out to 1
        if (comp.is_path()) {
            product *= t_path_fast(static_cast<int>(comp.edges.size()), kernel);
        } else if (comp.is_cycle()) {
            product *= t_cycle_fast(static_cast<int>(comp.edges.size()), kernel);
        } else {
            // Relabel the component onto 0..v-1 and hand it to the oracle.
            std::unordered_map<int, int> local;
            for (int v : comp.vertices) {
                local.emplace(v, static_cast<int>(local.size()));
            }
            std::vector<Graph::Edge> edges;
            edges.reserve(comp.edges.size());
            for (auto& [a, b] : comp.edges) {
                edges.emplace_back(local.at(a), local.at(b));
            }
            Graph g = Graph::generic(static_cast<int>(comp.vertices.size()),
                                     std::move(edges));
            product *= t_hom_oracle(g, kernel);
        }
    }
    return product;
}

}  // namespace kernelhom
