#include "wedge/edge_domination.hpp"

#include <stdexcept>
#include <unordered_set>

#include "wedge/matching.hpp"

namespace wedge {

bool is_edge_dominating(const Graph& g, const EdgeList& f) {
    EdgeSpace es(g);
    return es.closed_of(es.mask_of(f)) == es.all;
}

namespace {

Bits128 private_mask(const EdgeSpace& es, Bits128 chosen, int f) {
    Bits128 others;
    chosen.for_each([&](int i) {
        if (i != f) others |= es.closed[i];
    });
    return andnot(es.closed[f], others);
}

// Backtracking over the first undominated edge: any minimal edge dominating
// set must contain a member of its closed neighborhood. A branch dies once
// some chosen edge loses every potential private neighbor (supersets only
// shrink private sets), and a dominating set reached with all private sets
// nonempty is exactly a minimal one. Distinct choice orders can rebuild the
// same set, hence the dedup on expanded partial sets.
struct MinimalEdsSearch {
    const EdgeSpace& es;
    const std::function<bool(Bits128, const EdgeSpace&)>& emit;
    std::uint64_t limit;
    std::unordered_set<Bits128, Bits128Hash> expanded;
    std::uint64_t visited = 0;
    bool stopped = false;

    void run() { rec(Bits128{}, Bits128{}); }

    void rec(Bits128 chosen, Bits128 dominated) {
        if (stopped) return;
        if (!expanded.insert(chosen).second) return;
        bool viable = true;
        chosen.for_each([&](int f) {
            if (viable && private_mask(es, chosen, f).none()) viable = false;
        });
        if (!viable) return;
        if (dominated == es.all) {
            ++visited;
            if (!emit(chosen, es) || visited >= limit) stopped = true;
            return;
        }
        int e = andnot(es.all, dominated).lowest();
        es.closed[e].for_each([&](int f) {
            if (!stopped && !chosen.test(f))
                rec(Bits128::one(f) | chosen, dominated | es.closed[f]);
        });
    }
};

struct GammaSearch {
    const EdgeSpace& es;
    int best;

    explicit GammaSearch(const EdgeSpace& es) : es(es), best(es.size()) {}

    void rec(int count, Bits128 dominated) {
        if (dominated == es.all) {
            best = std::min(best, count);
            return;
        }
        if (count + 1 >= best) return;
        int e = andnot(es.all, dominated).lowest();
        es.closed[e].for_each(
            [&](int f) { rec(count + 1, dominated | es.closed[f]); });
    }
};

}  // namespace

EdgeList private_edge_neighbors(const Graph& g, const EdgeList& f_set,
                                const Edge& f) {
    EdgeSpace es(g);
    Bits128 chosen = es.mask_of(f_set);
    int fi = es.index_of(f);
    if (fi < 0 || !chosen.test(fi))
        throw std::invalid_argument("private_edge_neighbors: f not in F");
    return es.to_edges(private_mask(es, chosen, fi));
}

bool is_minimal_eds(const Graph& g, const EdgeList& f) {
    EdgeSpace es(g);
    Bits128 chosen = es.mask_of(f);
    if (es.closed_of(chosen) != es.all) return false;
    bool minimal = true;
    chosen.for_each([&](int i) {
        if (minimal && private_mask(es, chosen, i).none()) minimal = false;
    });
    return minimal;
}

EdsEnumeration enumerate_minimal_eds(
    const Graph& g, const std::function<bool(const EdgeList&)>& visitor,
    std::uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("enumerate_minimal_eds: limit >= 1");
    EdgeSpace es(g);
    EdsEnumeration summary;
    summary.min_size = es.size() + 1;
    summary.max_size = -1;
    std::function<bool(Bits128, const EdgeSpace&)> emit =
        [&](Bits128 set, const EdgeSpace& space) {
            int size = set.count();
            summary.min_size = std::min(summary.min_size, size);
            summary.max_size = std::max(summary.max_size, size);
            ++summary.visited;
            return visitor(space.to_edges(set));
        };
    MinimalEdsSearch search{es, emit, limit};
    search.run();
    summary.complete = !search.stopped;
    if (summary.visited == 0) summary.min_size = summary.max_size = 0;
    return summary;
}

EdsCertificate eds_certificate(const Graph& g, bool early_exit) {
    EdgeSpace es(g);
    EdsCertificate cert;
    bool seen = false;
    Bits128 min_set, max_set;
    int min_size = 0, max_size = 0;
    std::function<bool(Bits128, const EdgeSpace&)> emit =
        [&](Bits128 set, const EdgeSpace&) {
            int size = set.count();
            if (!seen) {
                seen = true;
                min_set = max_set = set;
                min_size = max_size = size;
            } else if (size < min_size) {
                min_set = set;
                min_size = size;
            } else if (size > max_size) {
                max_set = set;
                max_size = size;
            }
            return !(early_exit && min_size != max_size);
        };
    MinimalEdsSearch search{es, emit, ~0ull};
    search.run();
    cert.gamma_prime = min_size;
    cert.Gamma_prime = max_size;
    cert.min_witness = es.to_edges(min_set);
    cert.max_witness = es.to_edges(max_set);
    cert.is_wed = min_size == max_size;
    cert.exact = !(early_exit && min_size != max_size);
    return cert;
}

int gamma_prime(const Graph& g) {
    EdgeSpace es(g);
    if (es.size() == 0) return 0;
    GammaSearch search(es);
    search.rec(0, Bits128{});
    return search.best;
}

bool is_wed(const Graph& g) {
    for (const Component& c : components(g)) {
        if (c.graph.size() == 0) continue;
        if (!is_equimatchable(c.graph)) return false;
        if (!eds_certificate(c.graph, /*early_exit=*/true).is_wed) return false;
    }
    return true;
}

}  // namespace wedge
