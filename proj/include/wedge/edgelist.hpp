#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wedge/graph.hpp"

namespace wedge {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line(line) {}
};

// Format: optional '#' comment lines anywhere; the first significant line is
// "n <order>"; every following significant line is one edge "u v" with
// 0-based distinct ids. Throws ParseError with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);

std::string emit_edge_list(const Graph& g);

}  // namespace wedge
