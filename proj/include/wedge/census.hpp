#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wedge/graph.hpp"

namespace wedge {

inline constexpr int kCensusMaxOrder = 10;

struct CensusFilter {
    bool connected = true;
    bool triangle_free = false;
    bool nonbipartite = false;
    std::optional<int> min_girth;
    bool split_only = false;
    int max_order = 1;
};

// Visits one representative per isomorphism class passing the filter, for
// each order 1..max_order; returns the number visited. Graphs are produced
// by edge augmentation with canonical-form dedup; the triangle_free and
// min_girth filters prune during generation (both are monotone under adding
// edges), the remaining filters select at visit time. Visit order is
// deterministic: ascending order, then edge count, then canonical code.
// jobs > 1 shards the augmentation work; visitation stays sequential.
std::uint64_t enumerate_connected(const CensusFilter& filter,
                                  const std::function<void(const Graph&)>& visitor,
                                  int jobs = 1);

struct InvariantReport {
    int order = 0;
    int size = 0;
    int girth_value = kGirthInfinite;
    bool bipartite = false;
    bool split = false;
    int alpha_prime = 0;
    int i_prime = 0;
    int gamma_prime = 0;
    int Gamma_prime = 0;
    bool equimatchable = false;
    bool randomly_matchable = false;
    bool wed = false;
    std::string canonical;
};

// All invariants of one graph (order <= 12), with the internal consistency
// relations gamma' = i' <= alpha' <= Gamma' and wed => equimatchable
// enforced before returning.
InvariantReport invariant_report(const Graph& g);

}  // namespace wedge
