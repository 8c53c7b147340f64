#include "wedge/canonical.hpp"

#include <array>
#include <stdexcept>

#include "wedge/graph6.hpp"

namespace wedge {

namespace {

// Lexicographically minimal labeling by depth-first placement. At step k the
// next vertex contributes the column x(0,k)..x(k-1,k) of the bitstring; a
// labeling that does not pick a minimal column at some step is beaten inside
// that block by one that does, so only minimal-column candidates are
// explored. Two surviving candidates whose swap is an automorphism (twins:
// equal neighborhoods outside the pair) generate identical subtrees, so one
// per twin class suffices. Comparisons against the best labeling are done on
// whole column prefixes at node entry, which stays valid when the best
// changes between sibling branches.
struct CanonSearch {
    const Graph& g;
    std::array<int, kCanonicalMaxOrder> twin_rep{};
    std::array<std::uint16_t, kCanonicalMaxOrder> best_cols{};
    std::array<int, kCanonicalMaxOrder> best_perm{};
    std::array<int, kCanonicalMaxOrder> placed{};
    std::array<std::uint16_t, kCanonicalMaxOrder> cols{};
    bool have_best = false;

    explicit CanonSearch(const Graph& g) : g(g) {
        // A vertex cannot have both an adjacent and a non-adjacent twin, so
        // chaining to the first earlier twin yields consistent classes.
        for (int u = 0; u < g.order; ++u) {
            twin_rep[u] = u;
            for (int v = 0; v < u; ++v) {
                std::uint64_t nu = g.adj[u] & ~(1ull << v);
                std::uint64_t nv = g.adj[v] & ~(1ull << u);
                if (nu == nv) {
                    twin_rep[u] = twin_rep[v];
                    break;
                }
            }
        }
    }

    void dfs(int k, std::uint64_t placed_mask) {
        int cmp = have_best ? 0 : -1;  // cols[0..k-1] versus best prefix
        for (int j = 0; j < k && cmp == 0; ++j)
            if (cols[j] != best_cols[j]) cmp = cols[j] < best_cols[j] ? -1 : 1;
        if (cmp > 0) return;
        if (k == g.order) {
            if (cmp < 0) {
                best_cols = cols;
                for (int i = 0; i < g.order; ++i) best_perm[i] = placed[i];
                have_best = true;
            }
            return;
        }
        std::uint16_t min_col = 0xffff;
        std::array<std::uint16_t, kCanonicalMaxOrder> cand_col{};
        for (int u = 0; u < g.order; ++u) {
            if ((placed_mask >> u) & 1) continue;
            std::uint16_t col = 0;
            for (int j = 0; j < k; ++j)
                col = static_cast<std::uint16_t>(
                    (col << 1) | ((g.adj[u] >> placed[j]) & 1));
            cand_col[u] = col;
            min_col = std::min(min_col, col);
        }
        if (cmp == 0 && min_col > best_cols[k]) return;
        cols[k] = min_col;
        std::uint64_t seen_reps = 0;
        for (int u = 0; u < g.order; ++u) {
            if ((placed_mask >> u) & 1 || cand_col[u] != min_col) continue;
            if ((seen_reps >> twin_rep[u]) & 1) continue;
            seen_reps |= 1ull << twin_rep[u];
            placed[k] = u;
            dfs(k + 1, placed_mask | (1ull << u));
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.order > kCanonicalMaxOrder)
        throw std::invalid_argument("canonical_form: order over " +
                                    std::to_string(kCanonicalMaxOrder));
    if (g.order <= 1) return g;
    CanonSearch search(g);
    search.dfs(0, 0);
    Graph out(g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.has_edge(search.best_perm[a], search.best_perm[b]))
                out.add_edge(a, b);
    return out;
}

std::string canonical_code(const Graph& g) {
    return graph6_encode(canonical_form(g));
}

}  // namespace wedge
