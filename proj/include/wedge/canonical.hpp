#pragma once

#include <string>

#include "wedge/graph.hpp"

namespace wedge {

inline constexpr int kCanonicalMaxOrder = 12;

// Relabeling of g whose upper-triangle adjacency bitstring (column-major,
// the graph6 bit order) is lexicographically minimal over all vertex
// permutations. Two graphs are isomorphic iff their canonical forms are
// equal. Order <= 12.
Graph canonical_form(const Graph& g);

// graph6 encoding of canonical_form(g); equal codes iff isomorphic, and
// comparing codes of equal order compares the canonical bitstrings.
std::string canonical_code(const Graph& g);

}  // namespace wedge
