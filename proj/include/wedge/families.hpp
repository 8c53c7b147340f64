#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wedge/graph.hpp"

namespace wedge {

enum class FamilyId {
    COMPLETE,
    BICLIQUE,
    STAR,
    CYCLE,
    PATH,
    GSTAR,
    HSTAR,
    H1,
    H2,
    H3,
    F11,
    F12,
    F21,
    F22,
    F3,
    F4,
    G11,
    G12,
    G21,
    G22,
    G23,
    G31,
    G32,
    BLOWUP,
    PRODUCT,
};

// Parameter keys by family:
//   COMPLETE/CYCLE/PATH: n          STAR: n (leaf count, K_{1,n})
//   BICLIQUE: r, s                  H1/H2: leaves    H3/GSTAR/HSTAR: none
//   F/G families: subsets of n, m, r, s, k, l per their definitions
//   BLOWUP: m1..m11 (multiplicities applied to the 11-vertex base graph)
//   PRODUCT: p, q (the product of complete graphs K_p and K_q)
struct FamilySpec {
    FamilyId family_id;
    std::map<std::string, int> params;
};

// The 11-vertex base graph of the blow-up families; vertex u_i has id i-1.
Graph gstar();
// 7 vertices, 8 edges: a 5-cycle and a 4-cycle sharing one edge.
Graph hstar();

Graph standard(FamilyId kind, const std::vector<int>& sizes);

// Throws std::invalid_argument naming the violated constraint.
Graph build(const FamilySpec& spec);

// Every valid parameter tuple whose built graph has order <= max_order, in
// lexicographic order of parameter values (keys ordered alphabetically).
// Not available for BLOWUP and PRODUCT.
std::vector<FamilySpec> parameter_grid(FamilyId id, int max_order);

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);
std::vector<FamilyId> all_family_ids();

}  // namespace wedge
