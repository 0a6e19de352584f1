#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace kernelhom {

enum class GraphKind { path, cycle, edge, generic };

// Finite simple graph with indexed edges. Immutable after construction.
//
// Path edges are indexed left to right: edge k of the m-edge path joins
// vertices {k, k+1}. Cycle edge k joins {k, (k+1) mod m}. The left-to-right
// indexing is load-bearing for the composition bijection below.
class Graph {
public:
    using Edge = std::pair<int, int>;

    static Graph path(int m);
    static Graph cycle(int m);
    static Graph single_edge();
    static Graph generic(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    GraphKind kind() const { return kind_; }

    // Same vertex set, edge r removed. Result is tagged generic.
    Graph without_edge(int r) const;

    // Text form used by the CLI and in reports: "path:m", "cycle:m", "k2",
    // "generic(v,e)".
    std::string to_string() const;

private:
    Graph(GraphKind kind, int vertex_count, std::vector<Edge> edges);

    GraphKind kind_;
    int vertex_count_;
    std::vector<Edge> edges_;
};

// Parses the CLI graph notation. Throws std::invalid_argument on bad input.
Graph parse_graph(const std::string& text);

// Spanning subgraph of a host, encoded as a bit vector over host edge
// indices. The host is shared, so masks are cheap to copy.
class SubgraphMask {
public:
    SubgraphMask(std::shared_ptr<const Graph> host, std::uint32_t bits);

    const Graph& host() const { return *host_; }
    std::shared_ptr<const Graph> host_ptr() const { return host_; }
    std::uint32_t bits() const { return bits_; }
    int popcount() const;
    bool contains(int edge_index) const { return (bits_ >> edge_index) & 1u; }

    // Selected edges, in host index order.
    std::vector<Graph::Edge> edges() const;

    // The mask as a standalone generic graph on the full host vertex set.
    Graph to_graph() const;

private:
    std::shared_ptr<const Graph> host_;
    std::uint32_t bits_;
};

// One connected component of a spanning subgraph. Vertices carry host
// labels; edges are pairs of host labels.
struct Component {
    std::vector<int> vertices;
    std::vector<Graph::Edge> edges;

    bool is_isolated_vertex() const { return edges.empty(); }
    bool is_path() const;
    bool is_cycle() const;
};

std::vector<Component> connected_components(const SubgraphMask& mask);

// All spanning subgraphs of H with a positive even number of edges.
// Requires e(H) <= 24; the enumeration is 2^{e(H)}.
std::vector<SubgraphMask> even_spanning_subgraphs(const Graph& host);

// The subset with exactly two_d edges. two_d must be even and in
// [2, e(H)]. For the m-edge path this list has size C(m, two_d).
std::vector<SubgraphMask> even_subgraphs_of_size(const Graph& host, int two_d);

// Tuple of nonnegative integers summing to 2d. When tied to the m-edge
// path, the length is m - 2d + 1 and each part is the edge count of one
// subgraph component read left to right.
struct Composition {
    std::vector<int> parts;

    int degree() const;  // sum of parts
    int length() const { return static_cast<int>(parts.size()); }

    bool operator==(const Composition& other) const = default;
};

// All compositions of 2d into m - 2d + 1 nonnegative parts, in ascending
// lexicographic order. Count is C(m, 2d). Requires 1 <= d <= m/2.
std::vector<Composition> compositions(int m, int d);

// Mutually inverse bijections between compositions and even subgraphs of
// the m-edge path. Reading left to right, part i is the edge count of the
// subgraph component immediately left of the i-th removed edge; the last
// part belongs to the component holding the rightmost vertex.
SubgraphMask composition_to_subgraph(int m, const Composition& c);
Composition subgraph_to_composition(const SubgraphMask& mask);

}  // namespace kernelhom
