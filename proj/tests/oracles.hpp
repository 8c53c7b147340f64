#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "wedge/graph.hpp"

// Brute-force reference implementations, kept deliberately free of the
// engine's search machinery: subsets are classified straight from the
// definitions, canonical forms come from trying every permutation, and
// connectivity/split tests are re-derived locally.
namespace oracle {

struct SubsetInvariants {
    int alpha_prime = 0;
    int i_prime = 0;
    int gamma_prime = 0;
    int Gamma_prime = 0;
    std::set<int> maximal_matching_sizes;
    std::set<int> minimal_eds_sizes;
};

// Walks all 2^|E| edge subsets; requires |E| <= 22.
SubsetInvariants subset_invariants(const wedge::Graph& g);

// Upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2), ...
// packed MSB-first into one word; requires order <= 8 (at most 28 bits).
std::uint64_t column_bits(const wedge::Graph& g);

// Minimum of column_bits over every vertex permutation; order <= 8.
std::uint64_t permutation_min_bits(const wedge::Graph& g);

// Connected isomorphism classes per order 1..max_order, by enumerating all
// labeled graphs and deduplicating on permutation_min_bits; max_order <= 6.
std::vector<std::uint64_t> labeled_connected_counts(int max_order);

// Split test over all 2^order candidate clique parts.
bool brute_split(const wedge::Graph& g);

// Connected classes at orders 1..9, computed separately with the S_n
// cycle index and an inverse Euler transform.
inline constexpr std::uint64_t kConnectedCounts[] = {
    1, 1, 2, 6, 21, 112, 853, 11117, 261080};

}  // namespace oracle
