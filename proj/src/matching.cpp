#include "wedge/matching.hpp"

#include <stdexcept>
#include <unordered_map>

namespace wedge {

bool is_maximal_matching(const Graph& g, const EdgeList& m) {
    std::uint64_t covered = 0;
    for (const Edge& e : m) {
        if (e.u < 0 || e.v >= g.order || !g.has_edge(e.u, e.v))
            throw std::invalid_argument("is_maximal_matching: edge " +
                                        std::to_string(e.u) + " " +
                                        std::to_string(e.v) +
                                        " not in the graph");
        std::uint64_t ends = (1ull << e.u) | (1ull << e.v);
        if (covered & ends) return false;  // shared endpoint
        covered |= ends;
    }
    for (int v = 0; v < g.order; ++v)
        if (!((covered >> v) & 1) && (g.adj[v] & ~covered)) return false;
    return true;
}

namespace {

// Exact matching invariants by branching over the free-vertex set, memoized
// per call. Intended for order <= ~20; state counts stay far below 2^order
// because branches remove two vertices at a time.
struct MatchingSolver {
    const Graph& g;
    std::unordered_map<std::uint64_t, int> memo_max;
    std::unordered_map<std::uint64_t, int> memo_min;

    explicit MatchingSolver(const Graph& g) : g(g) {
        if (g.order > 24)
            throw std::invalid_argument("matching engine bound is order 24");
    }

    std::uint64_t full() const {
        return g.order == 64 ? ~0ull : (1ull << g.order) - 1;
    }

    int maximum(std::uint64_t free) {
        // First free vertex with a free neighbor is either unmatched (then it
        // never matters again) or matched to one of its free neighbors.
        int v = -1;
        std::uint64_t m = free;
        while (m) {
            int c = std::countr_zero(m);
            m &= m - 1;
            if (g.adj[c] & free) {
                v = c;
                break;
            }
        }
        if (v < 0) return 0;
        auto it = memo_max.find(free);
        if (it != memo_max.end()) return it->second;
        int best = maximum(free & ~(1ull << v));
        std::uint64_t nb = g.adj[v] & free;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            best = std::max(
                best, 1 + maximum(free & ~(1ull << v) & ~(1ull << w)));
        }
        memo_max.emplace(free, best);
        return best;
    }

    int minimum_maximal(std::uint64_t free) {
        // Let uv be the first edge inside the free set. Any maximal matching
        // of the free subgraph must contain an edge meeting {u, v}, and for
        // each such edge e the rest is a maximal matching of free - e.
        int u = -1, v = -1;
        std::uint64_t m = free;
        while (m) {
            int c = std::countr_zero(m);
            m &= m - 1;
            std::uint64_t nb = g.adj[c] & free;
            if (nb) {
                u = c;
                v = std::countr_zero(nb);
                break;
            }
        }
        if (u < 0) return 0;
        auto it = memo_min.find(free);
        if (it != memo_min.end()) return it->second;
        int best = g.order + 1;
        for (int x : {u, v}) {
            std::uint64_t nb = g.adj[x] & free;
            while (nb) {
                int y = std::countr_zero(nb);
                nb &= nb - 1;
                best = std::min(
                    best,
                    1 + minimum_maximal(free & ~(1ull << x) & ~(1ull << y)));
            }
        }
        memo_min.emplace(free, best);
        return best;
    }
};

}  // namespace

int maximum_matching_size(const Graph& g) {
    MatchingSolver s(g);
    return s.maximum(s.full());
}

int minimum_maximal_matching_size(const Graph& g) {
    MatchingSolver s(g);
    return s.minimum_maximal(s.full());
}

MatchingProfile matching_profile(const Graph& g) {
    MatchingSolver s(g);
    MatchingProfile p;
    p.alpha_prime = s.maximum(s.full());
    p.i_prime = s.minimum_maximal(s.full());
    p.has_perfect = g.order % 2 == 0 && 2 * p.alpha_prime == g.order;
    return p;
}

bool has_perfect_matching(const Graph& g) {
    return g.order % 2 == 0 && 2 * maximum_matching_size(g) == g.order;
}

bool is_equimatchable(const Graph& g) {
    MatchingSolver s(g);
    return s.maximum(s.full()) == s.minimum_maximal(s.full());
}

bool is_randomly_matchable(const Graph& g) {
    MatchingProfile p = matching_profile(g);
    return p.alpha_prime == p.i_prime && p.has_perfect;
}

}  // namespace wedge
