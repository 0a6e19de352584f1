#include "kernelhom/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kernelhom/numeric.hpp"

namespace kernelhom {

namespace {

constexpr int kEnumerationCap = 24;

void check_enumeration_cap(const Graph& host) {
    if (host.edge_count() > kEnumerationCap) {
        throw std::invalid_argument(
            "even subgraph enumeration requires e(H) <= " +
            std::to_string(kEnumerationCap) + ", got " +
            std::to_string(host.edge_count()));
    }
}

}  // namespace

Graph::Graph(GraphKind kind, int vertex_count, std::vector<Edge> edges)
    : kind_(kind), vertex_count_(vertex_count), edges_(std::move(edges)) {
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges_) {
        if (a == b) throw std::invalid_argument("self-loop rejected");
        if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            throw std::invalid_argument("duplicate edge rejected");
        }
    }
}

Graph Graph::path(int m) {
    if (m < 1) throw std::invalid_argument("path length must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) edges.emplace_back(k, k + 1);
    return Graph(GraphKind::path, m + 1, std::move(edges));
}

Graph Graph::cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle length must be >= 3");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) edges.emplace_back(k, (k + 1) % m);
    return Graph(GraphKind::cycle, m, std::move(edges));
}

Graph Graph::single_edge() {
    return Graph(GraphKind::edge, 2, {{0, 1}});
}

Graph Graph::generic(int vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    return Graph(GraphKind::generic, vertex_count, std::move(edges));
}

Graph Graph::without_edge(int r) const {
    if (r < 0 || r >= edge_count()) {
        throw std::invalid_argument("edge index out of range");
    }
    std::vector<Edge> rest;
    rest.reserve(edges_.size() - 1);
    for (int k = 0; k < edge_count(); ++k) {
        if (k != r) rest.push_back(edges_[k]);
    }
    return Graph(GraphKind::generic, vertex_count_, std::move(rest));
}

std::string Graph::to_string() const {
    switch (kind_) {
        case GraphKind::path:
            return "path:" + std::to_string(edge_count());
        case GraphKind::cycle:
            return "cycle:" + std::to_string(edge_count());
        case GraphKind::edge:
            return "k2";
        case GraphKind::generic:
            return "generic(" + std::to_string(vertex_count_) + "," +
                   std::to_string(edge_count()) + ")";
    }
    return "?";
}

Graph parse_graph(const std::string& text) {
    if (text == "k2") return Graph::single_edge();
    auto parse_tail = [&](const std::string& prefix) {
        const std::string num = text.substr(prefix.size());
        if (num.empty() ||
            num.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("bad graph notation: " + text);
        }
        return std::stoi(num);
    };
    if (text.rfind("path:", 0) == 0) return Graph::path(parse_tail("path:"));
    if (text.rfind("cycle:", 0) == 0) return Graph::cycle(parse_tail("cycle:"));
    throw std::invalid_argument(
        "bad graph notation: " + text + " (expected path:m, cycle:m, or k2)");
}

SubgraphMask::SubgraphMask(std::shared_ptr<const Graph> host,
                           std::uint32_t bits)
    : host_(std::move(host)), bits_(bits) {
    if (!host_) throw std::invalid_argument("null host");
    if (host_->edge_count() < 32 && (bits_ >> host_->edge_count()) != 0) {
        throw std::invalid_argument("mask has bits beyond host edges");
    }
}

int SubgraphMask::popcount() const { return std::popcount(bits_); }

std::vector<Graph::Edge> SubgraphMask::edges() const {
    std::vector<Graph::Edge> out;
    out.reserve(popcount());
    for (int k = 0; k < host_->edge_count(); ++k) {
        if (contains(k)) out.push_back(host_->edges()[k]);
    }
    return out;
}

Graph SubgraphMask::to_graph() const {
    return Graph::generic(host_->vertex_count(), edges());
}

namespace {

// Degree of each component vertex, keyed by position in `vertices`.
std::vector<int> component_degrees(const Component& c) {
    std::vector<int> deg(c.vertices.size(), 0);
    auto index_of = [&](int v) {
        return std::lower_bound(c.vertices.begin(), c.vertices.end(), v) -
               c.vertices.begin();
    };
    for (auto& [a, b] : c.edges) {
        ++deg[index_of(a)];
        ++deg[index_of(b)];
    }
    return deg;
}

}  // namespace

bool Component::is_path() const {
    if (vertices.size() != edges.size() + 1) return false;
    auto deg = component_degrees(*this);
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

bool Component::is_cycle() const {
    if (edges.size() < 3 || vertices.size() != edges.size()) return false;
    auto deg = component_degrees(*this);
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

std::vector<Component> connected_components(const SubgraphMask& mask) {
    const Graph& host = mask.host();
    const int n = host.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int k = 0; k < host.edge_count(); ++k) {
        if (!mask.contains(k)) continue;
        auto [a, b] = host.edges()[k];
        parent[find(a)] = find(b);
    }
    std::vector<int> root_to_index(n, -1);
    std::vector<Component> comps;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (root_to_index[r] < 0) {
            root_to_index[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[root_to_index[r]].vertices.push_back(v);
    }
    for (int k = 0; k < host.edge_count(); ++k) {
        if (!mask.contains(k)) continue;
        auto [a, b] = host.edges()[k];
        comps[root_to_index[find(a)]].edges.push_back({a, b});
    }
    return comps;
}

std::vector<SubgraphMask> even_spanning_subgraphs(const Graph& host) {
    check_enumeration_cap(host);
    auto shared = std::make_shared<const Graph>(host);
    const std::uint32_t total = 1u << host.edge_count();
    std::vector<SubgraphMask> out;
    for (std::uint32_t bits = 1; bits < total; ++bits) {
        int pc = std::popcount(bits);
        if (pc > 0 && pc % 2 == 0) out.emplace_back(shared, bits);
    }
    return out;
}

std::vector<SubgraphMask> even_subgraphs_of_size(const Graph& host,
                                                 int two_d) {
    check_enumeration_cap(host);
    if (two_d % 2 != 0) {
        throw std::invalid_argument("subgraph size must be even");
    }
    if (two_d < 2 || two_d > host.edge_count()) {
        throw std::invalid_argument("subgraph size out of range");
    }
    auto shared = std::make_shared<const Graph>(host);
    std::vector<SubgraphMask> out;
    out.reserve(binomial(host.edge_count(), two_d));
    // Gosper's hack walks fixed-popcount masks in increasing order.
    const std::uint32_t limit = 1u << host.edge_count();
    std::uint32_t bits = (1u << two_d) - 1;
    while (bits < limit) {
        out.emplace_back(shared, bits);
        std::uint32_t c = bits & -bits;
        std::uint32_t r = bits + c;
        bits = (((r ^ bits) >> 2) / c) | r;
    }
    return out;
}

int Composition::degree() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<Composition> compositions(int m, int d) {
    if (d < 1 || 2 * d > m) {
        throw std::invalid_argument("need 1 <= d <= m/2");
    }
    const int k = m - 2 * d + 1;
    const int total = 2 * d;
    std::vector<Composition> out;
    out.reserve(binomial(m, 2 * d));
    std::vector<int> t(k, 0);
    t[k - 1] = total;
    while (true) {
        out.push_back(Composition{t});
        // Lexicographic successor: bump the rightmost position that has
        // mass strictly to its right, then push the remainder to the end.
        int j = k - 2;
        int suffix = t[k - 1];  // sum of parts strictly right of j
        while (j >= 0 && suffix == 0) {
            suffix += t[j];
            --j;
        }
        if (j < 0) break;
        t[j] += 1;
        for (int i = j + 1; i < k; ++i) t[i] = 0;
        t[k - 1] = suffix - 1;
    }
    return out;
}

SubgraphMask composition_to_subgraph(int m, const Composition& c) {
    const int two_d = c.degree();
    if (two_d < 2 || two_d % 2 != 0 || two_d > m) {
        throw std::invalid_argument("composition degree must be even, in [2, m]");
    }
    if (c.length() != m - two_d + 1) {
        throw std::invalid_argument("composition length must be m - 2d + 1");
    }
    for (int part : c.parts) {
        if (part < 0) throw std::invalid_argument("negative composition part");
    }
    auto shared = std::make_shared<const Graph>(Graph::path(m));
    std::uint32_t bits = 0;
    int pos = 0;
    for (int i = 0; i < c.length(); ++i) {
        for (int t = 0; t < c.parts[i]; ++t) {
            bits |= 1u << pos;
            ++pos;
        }
        if (i + 1 < c.length()) ++pos;  // the removed edge separating parts
    }
    return SubgraphMask(std::move(shared), bits);
}

Composition subgraph_to_composition(const SubgraphMask& mask) {
    const Graph& host = mask.host();
    if (host.kind() != GraphKind::path) {
        throw std::invalid_argument("host must be a path");
    }
    const int m = host.edge_count();
    const int two_d = mask.popcount();
    if (two_d == 0 || two_d % 2 != 0) {
        throw std::invalid_argument("mask must have positive even size");
    }

    // Edge count of the mask component containing each vertex. Components
    // of a path subgraph are runs of consecutive edges.
    std::vector<int> comp_edges(host.vertex_count(), 0);
    int run_start = 0;
    int run_len = 0;
    for (int k = 0; k <= m; ++k) {
        bool in_run = k < m && mask.contains(k);
        if (in_run) {
            if (run_len == 0) run_start = k;
            ++run_len;
        } else if (run_len > 0) {
            for (int v = run_start; v <= run_start + run_len; ++v) {
                comp_edges[v] = run_len;
            }
            run_len = 0;
        }
    }

    std::vector<int> parts;
    for (int k = 0; k < m; ++k) {
        if (!mask.contains(k)) {
            parts.push_back(comp_edges[k]);  // left endpoint of removed edge k
        }
    }
    parts.push_back(comp_edges[m]);  // rightmost vertex of the path
    return Composition{std::move(parts)};
}

}  // namespace kernelhom
