#include "wedge/census.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "parallel.hpp"
#include "wedge/canonical.hpp"
#include "wedge/edge_domination.hpp"
#include "wedge/graph6.hpp"
#include "wedge/matching.hpp"

namespace wedge {

namespace {

bool girth_at_least(const Graph& g, int k) {
    int gi = girth(g);
    return gi == kGirthInfinite || gi >= k;
}

bool passes(const CensusFilter& filter, const Graph& g) {
    if (filter.connected && !is_connected(g)) return false;
    if (filter.triangle_free && !girth_at_least(g, 4)) return false;
    if (filter.nonbipartite && is_bipartite(g).has_value()) return false;
    if (filter.min_girth && !girth_at_least(g, *filter.min_girth)) return false;
    if (filter.split_only && !is_split(g)) return false;
    return true;
}

// Supergraphs of a graph with a triangle or a short cycle keep it, so these
// two prunes are sound during augmentation.
bool expansion_allowed(const CensusFilter& filter, const Graph& g, int u,
                       int v) {
    if (filter.triangle_free && (g.adj[u] & g.adj[v])) return false;
    if (filter.min_girth) {
        Graph g2 = g;
        g2.add_edge(u, v);
        if (!girth_at_least(g2, *filter.min_girth)) return false;
    }
    return true;
}

}  // namespace

std::uint64_t enumerate_connected(const CensusFilter& filter,
                                  const std::function<void(const Graph&)>& visitor,
                                  int jobs) {
    if (filter.max_order < 1 || filter.max_order > kCensusMaxOrder)
        throw std::invalid_argument("enumerate_connected: max_order must be 1.." +
                                    std::to_string(kCensusMaxOrder));
    std::uint64_t count = 0;
    for (int n = 1; n <= filter.max_order; ++n) {
        std::vector<std::string> level{canonical_code(Graph(n))};
        while (!level.empty()) {
            for (const std::string& code : level) {
                Graph g = graph6_decode(code);
                if (passes(filter, g)) {
                    ++count;
                    visitor(g);
                }
            }
            std::set<std::string> next;
            std::mutex merge;
            parallel_for(level.size(), jobs, [&](std::size_t i) {
                Graph g = graph6_decode(level[i]);
                std::set<std::string> local;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        if (g.has_edge(u, v)) continue;
                        if (!expansion_allowed(filter, g, u, v)) continue;
                        Graph g2 = g;
                        g2.add_edge(u, v);
                        local.insert(canonical_code(g2));
                    }
                std::lock_guard<std::mutex> lock(merge);
                next.merge(local);
            });
            level.assign(next.begin(), next.end());
        }
    }
    return count;
}

InvariantReport invariant_report(const Graph& g) {
    if (g.order > kCanonicalMaxOrder)
        throw std::invalid_argument("invariant_report: order over " +
                                    std::to_string(kCanonicalMaxOrder));
    InvariantReport r;
    r.order = g.order;
    r.size = g.size();
    r.girth_value = girth(g);
    r.bipartite = is_bipartite(g).has_value();
    r.split = is_split(g);
    MatchingProfile profile = matching_profile(g);
    r.alpha_prime = profile.alpha_prime;
    r.i_prime = profile.i_prime;
    EdsCertificate cert = eds_certificate(g);
    r.gamma_prime = cert.gamma_prime;
    r.Gamma_prime = cert.Gamma_prime;
    r.equimatchable = r.i_prime == r.alpha_prime;
    r.randomly_matchable =
        r.equimatchable && g.order % 2 == 0 && 2 * r.alpha_prime == g.order;
    r.wed = cert.is_wed;
    r.canonical = canonical_code(g);
    if (r.gamma_prime != r.i_prime || r.i_prime > r.alpha_prime ||
        r.alpha_prime > r.Gamma_prime || (r.wed && !r.equimatchable))
        throw std::logic_error("invariant_report: consistency check failed");
    return r;
}

}  // namespace wedge
