#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wedge/census.hpp"

namespace wedge {

enum class TheoremId {
    KN,                   // K_n is WED iff n <= 4
    KRS,                  // K_{r,s} with 2 <= r < s is never WED
    RANDOMLY_MATCHABLE,   // WED + perfect matching = K4 or K_{n,n}; randomly
                          // matchable = K_{2n} or K_{n,n}
    TRIANGLE_FREE,        // connected triangle-free nonbipartite WED = {C5, C7, H*}
    SPLIT,                // connected split WED = {K2,K3,K4,H3} + H1 + H2 + stars
    CARTESIAN,            // only WED product of nontrivial factors is K2 x K2
    GIRTH5,               // girth >= 5 WED = {K2,C5,C7} or bipartite with one
                          // side exactly the support vertices
    MATCH_REMOVAL,        // WED is closed under removing N_e[M], M a matching
    GAMMA_EQUALS_I,       // gamma' = i' on every graph
    FACTORS,              // PM-free factors: product WED => both factors WED
};

struct TheoremVerdict {
    TheoremId theorem_id;
    int max_order = 0;  // order bound; factor-order bound for CARTESIAN/FACTORS
    std::uint64_t graphs_checked = 0;
    std::vector<std::string> witnesses;        // codes classified positive
    std::vector<std::string> counterexamples;  // codes violating the statement
    bool holds = false;                        // iff counterexamples empty
};

// Exhaustively checks the characterization over its hypothesis class up to
// max_order. CARTESIAN and FACTORS iterate over unordered pairs of connected
// factors of order 2..max_order; MATCH_REMOVAL checks every nonempty
// matching of each WED graph. Codes are canonical (order <= 12) or plain
// graph6 beyond that.
TheoremVerdict verify(TheoremId id, int max_order, int jobs = 1);

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);
std::vector<TheoremId> all_theorem_ids();

}  // namespace wedge
