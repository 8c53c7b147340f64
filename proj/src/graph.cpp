#include "wedge/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace wedge {

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < order; ++v) twice += degree(v);
    return twice / 2;
}

// Neighbor-mask bits strictly above v.
static std::uint64_t bits_above(std::uint64_t mask, int v) {
    return v >= 63 ? 0ull : mask & ~((2ull << v) - 1);
}

EdgeList Graph::edges() const {
    EdgeList out;
    for (int u = 0; u < order; ++u) {
        std::uint64_t m = bits_above(adj[u], u);
        while (m) {
            int v = std::countr_zero(m);
            out.emplace_back(u, v);
            m &= m - 1;
        }
    }
    return out;
}

Graph from_edge_list(int order, const EdgeList& edges) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("order out of range 0.." +
                                    std::to_string(kMaxOrder));
    Graph g(order);
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " +
                                        std::to_string(e.u));
        if (e.u < 0 || e.v >= order)
            throw std::invalid_argument("vertex id out of range in edge " +
                                        std::to_string(e.u) + " " +
                                        std::to_string(e.v));
        if (g.has_edge(e.u, e.v))
            throw std::invalid_argument("duplicate edge " + std::to_string(e.u) +
                                        " " + std::to_string(e.v));
        g.add_edge(e.u, e.v);
    }
    return g;
}

std::vector<Component> components(const Graph& g) {
    std::vector<Component> out;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.order; ++s) {
        if ((seen >> s) & 1) continue;
        std::uint64_t comp = 1ull << s;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t m = frontier;
            while (m) {
                int v = std::countr_zero(m);
                next |= g.adj[v];
                m &= m - 1;
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        Component c;
        std::vector<int> local(static_cast<std::size_t>(g.order), -1);
        std::uint64_t m = comp;
        while (m) {
            int v = std::countr_zero(m);
            local[v] = static_cast<int>(c.vertex_map.size());
            c.vertex_map.push_back(v);
            m &= m - 1;
        }
        c.graph = Graph(static_cast<int>(c.vertex_map.size()));
        for (int lu = 0; lu < c.graph.order; ++lu) {
            std::uint64_t nb = g.adj[c.vertex_map[lu]];
            while (nb) {
                int w = std::countr_zero(nb);
                if (local[w] > lu) c.graph.add_edge(lu, local[w]);
                nb &= nb - 1;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order == 0) return true;
    std::uint64_t comp = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t m = frontier;
        while (m) {
            next |= g.adj[std::countr_zero(m)];
            m &= m - 1;
        }
        frontier = next & ~comp;
        comp |= next;
    }
    std::uint64_t all =
        g.order == 64 ? ~0ull : (1ull << g.order) - 1;
    return comp == all;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order), -1);
    for (int s = 0; s < g.order; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            std::uint64_t m = g.adj[v];
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < g.order; ++v)
        (color[v] == 0 ? b.left : b.right).push_back(v);
    return b;
}

int girth(const Graph& g) {
    int best = kGirthInfinite;
    // BFS from each vertex; a non-tree edge (v, w) closes a cycle of length
    // dist(v) + dist(w) + 1 through the root. The shortest cycle through the
    // root is found this way, so the minimum over all roots is the girth.
    std::vector<int> dist(static_cast<std::size_t>(g.order));
    std::vector<int> parent(static_cast<std::size_t>(g.order));
    std::vector<int> queue(static_cast<std::size_t>(g.order));
    for (int s = 0; s < g.order; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int v = queue[head++];
            std::uint64_t m = g.adj[v];
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue[tail++] = w;
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == kGirthInfinite || len < best) best = len;
                }
            }
        }
    }
    return best;
}

static void require_subset(const Graph& g, const EdgeList& f,
                           const char* what) {
    for (const Edge& e : f) {
        if (e.u < 0 || e.v >= g.order || e.u == e.v || !g.has_edge(e.u, e.v))
            throw std::invalid_argument(std::string(what) + ": edge " +
                                        std::to_string(e.u) + " " +
                                        std::to_string(e.v) +
                                        " not in the graph");
    }
}

std::vector<int> covered_vertices(const Graph& g, const EdgeList& x) {
    require_subset(g, x, "covered_vertices");
    std::uint64_t mask = 0;
    for (const Edge& e : x) mask |= (1ull << e.u) | (1ull << e.v);
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

EdgeList closed_edge_neighborhood(const Graph& g, const EdgeList& f) {
    EdgeSpace space(g);
    return space.to_edges(space.closed_of(space.mask_of(f)));
}

Graph remove_edge_neighborhood(const Graph& g, const EdgeList& m) {
    require_subset(g, m, "remove_edge_neighborhood");
    std::uint64_t covered = 0;
    for (const Edge& e : m) covered |= (1ull << e.u) | (1ull << e.v);
    Graph out(g.order);
    for (int v = 0; v < g.order; ++v)
        if (!((covered >> v) & 1)) out.adj[v] = g.adj[v] & ~covered;
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.order < 1 || h.order < 1)
        throw std::invalid_argument("cartesian_product: factors must have order >= 1");
    if (g.order * h.order > kMaxOrder)
        throw std::invalid_argument("cartesian_product: order over engine bound");
    Graph p(g.order * h.order);
    auto id = [&](int a, int b) { return a * h.order + b; };
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < h.order; ++b) {
            std::uint64_t m = bits_above(h.adj[b], b);
            while (m) {
                p.add_edge(id(a, b), id(a, std::countr_zero(m)));
                m &= m - 1;
            }
            m = bits_above(g.adj[a], a);
            while (m) {
                p.add_edge(id(a, b), id(std::countr_zero(m), b));
                m &= m - 1;
            }
        }
    return p;
}

Graph blowup(const Graph& h, const std::vector<int>& multiplicities) {
    if (static_cast<int>(multiplicities.size()) != h.order)
        throw std::invalid_argument("blowup: multiplicity count must equal order");
    int n = 0;
    std::vector<int> start(multiplicities.size());
    for (int i = 0; i < h.order; ++i) {
        if (multiplicities[i] < 0)
            throw std::invalid_argument("blowup: negative multiplicity");
        start[i] = n;
        n += multiplicities[i];
    }
    if (n > kMaxOrder)
        throw std::invalid_argument("blowup: order over engine bound");
    Graph g(n);
    for (int i = 0; i < h.order; ++i) {
        std::uint64_t m = bits_above(h.adj[i], i);
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            for (int a = 0; a < multiplicities[i]; ++a)
                for (int b = 0; b < multiplicities[j]; ++b)
                    g.add_edge(start[i] + a, start[j] + b);
        }
    }
    return g;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    // Hammer-Simeone: sort degrees d1 >= ... >= dn, let m be the largest i
    // with d_i >= i - 1; G is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
    // The m highest-degree vertices then form a clique and the rest an
    // independent set.
    std::vector<int> verts(static_cast<std::size_t>(g.order));
    for (int v = 0; v < g.order; ++v) verts[v] = v;
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    int m = 0;
    for (int i = 0; i < g.order; ++i)
        if (g.degree(verts[i]) >= i) m = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < g.order; ++i) {
        if (i < m)
            lhs += g.degree(verts[i]);
        else
            rhs += std::min(g.degree(verts[i]), m);
    }
    if (lhs != rhs) return std::nullopt;
    SplitPartition p;
    for (int i = 0; i < g.order; ++i)
        (i < m ? p.clique_part : p.independent_part).push_back(verts[i]);
    std::sort(p.clique_part.begin(), p.clique_part.end());
    std::sort(p.independent_part.begin(), p.independent_part.end());
    for (std::size_t a = 0; a < p.clique_part.size(); ++a)
        for (std::size_t b = a + 1; b < p.clique_part.size(); ++b)
            if (!g.has_edge(p.clique_part[a], p.clique_part[b]))
                throw std::logic_error("split_partition: witness not a clique");
    for (std::size_t a = 0; a < p.independent_part.size(); ++a)
        for (std::size_t b = a + 1; b < p.independent_part.size(); ++b)
            if (g.has_edge(p.independent_part[a], p.independent_part[b]))
                throw std::logic_error("split_partition: witness not independent");
    return p;
}

bool is_split(const Graph& g) { return split_partition(g).has_value(); }

std::vector<int> support_vertices(const Graph& g) {
    std::uint64_t mask = 0;
    for (int v = 0; v < g.order; ++v)
        if (g.degree(v) == 1) mask |= g.adj[v];
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

EdgeSpace::EdgeSpace(const Graph& g)
    : edges(g.edges()), vertex_edges(static_cast<std::size_t>(g.order)) {
    if (static_cast<int>(edges.size()) > kMaxEdges)
        throw std::invalid_argument("graph has more than " +
                                    std::to_string(kMaxEdges) + " edges");
    for (int i = 0; i < size(); ++i) {
        vertex_edges[edges[i].u].set(i);
        vertex_edges[edges[i].v].set(i);
    }
    closed.resize(edges.size());
    for (int i = 0; i < size(); ++i)
        closed[i] = vertex_edges[edges[i].u] | vertex_edges[edges[i].v];
    all = Bits128::low(size());
}

int EdgeSpace::index_of(const Edge& e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return -1;
    return static_cast<int>(it - edges.begin());
}

Bits128 EdgeSpace::mask_of(const EdgeList& f) const {
    Bits128 mask;
    for (const Edge& e : f) {
        int i = index_of(e);
        if (i < 0)
            throw std::invalid_argument("edge " + std::to_string(e.u) + " " +
                                        std::to_string(e.v) +
                                        " not in the graph");
        mask.set(i);
    }
    return mask;
}

EdgeList EdgeSpace::to_edges(Bits128 mask) const {
    EdgeList out;
    mask.for_each([&](int i) { out.push_back(edges[i]); });
    return out;
}

Bits128 EdgeSpace::closed_of(Bits128 mask) const {
    Bits128 out;
    mask.for_each([&](int i) { out |= closed[i]; });
    return out;
}

}  // namespace wedge
