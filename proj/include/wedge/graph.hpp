#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wedge/bits.hpp"

namespace wedge {

inline constexpr int kMaxOrder = 64;   // adjacency rows are single 64-bit masks
inline constexpr int kMaxEdges = 128;  // edge masks are Bits128
inline constexpr int kGirthInfinite = -1;

// Unordered pair of distinct vertices, normalized to u < v.
struct Edge {
    int u;
    int v;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Simple graph on vertex ids 0..order-1; row v is the neighbor mask of v.
struct Graph {
    int order = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(int n) : order(n), adj(static_cast<std::size_t>(n), 0) {}

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v) {
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~(1ull << v);
        adj[v] &= ~(1ull << u);
    }
    int degree(int v) const { return std::popcount(adj[v]); }
    int size() const;  // number of edges
    EdgeList edges() const;
    friend bool operator==(const Graph&, const Graph&) = default;
};

// Validates ids, rejects self-loops and duplicates.
Graph from_edge_list(int order, const EdgeList& edges);

struct Component {
    Graph graph;
    std::vector<int> vertex_map;  // local id -> id in the original graph
};

std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};

std::optional<Bipartition> is_bipartite(const Graph& g);

// Shortest cycle length, kGirthInfinite for forests.
int girth(const Graph& g);

// Vertices incident to at least one edge of x (validated against g).
std::vector<int> covered_vertices(const Graph& g, const EdgeList& x);

// N_e[F]: F plus every edge sharing an endpoint with a member of F.
EdgeList closed_edge_neighborhood(const Graph& g, const EdgeList& f);

// Same vertex set, edge set E(G) - N_e[M]; isolated vertices are kept.
Graph remove_edge_neighborhood(const Graph& g, const EdgeList& m);

// Vertex (g, h) gets id g * order(h) + h.
Graph cartesian_product(const Graph& g, const Graph& h);

// Replace vertex i by multiplicities[i] independent copies sharing its
// neighborhood; copies of vertex i occupy a contiguous id block, blocks in
// increasing i.
Graph blowup(const Graph& h, const std::vector<int>& multiplicities);

struct SplitPartition {
    std::vector<int> clique_part;
    std::vector<int> independent_part;
};

std::optional<SplitPartition> split_partition(const Graph& g);
bool is_split(const Graph& g);

// Vertices adjacent to at least one degree-1 vertex.
std::vector<int> support_vertices(const Graph& g);

// Edge indexing for one graph: per-edge closed-neighborhood masks drive the
// matching and domination engines. Edge indices follow edges() order
// (lexicographic by (u, v)).
struct EdgeSpace {
    EdgeList edges;
    std::vector<Bits128> vertex_edges;  // per vertex: incident edge mask
    std::vector<Bits128> closed;        // per edge: N_e[e] mask
    Bits128 all;

    explicit EdgeSpace(const Graph& g);

    int size() const { return static_cast<int>(edges.size()); }
    int index_of(const Edge& e) const;         // -1 when absent
    Bits128 mask_of(const EdgeList& f) const;  // rejects foreign edges
    EdgeList to_edges(Bits128 mask) const;
    Bits128 closed_of(Bits128 mask) const;
};

}  // namespace wedge
