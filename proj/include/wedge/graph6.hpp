#pragma once

#include <string>
#include <string_view>

#include "wedge/graph.hpp"

namespace wedge {

// Short-form graph6: byte order+63, then the upper-triangle bits in column
// order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
// groups, each +63, zero-padded. Order must be <= 62.
std::string graph6_encode(const Graph& g);

// Strict inverse: rejects bytes outside 63..126, truncated or oversized
// payloads, and nonzero padding bits.
Graph graph6_decode(std::string_view line);

}  // namespace wedge
