#include "wedge/edgelist.hpp"

#include <cctype>
#include <sstream>

namespace wedge {

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream fields(line);
        if (!have_header) {
            std::string tag;
            int order;
            fields >> tag;
            if (tag != "n")
                throw ParseError(lineno, "expected header \"n <order>\"");
            if (!(fields >> order) || order < 0 || order > kMaxOrder)
                throw ParseError(lineno, "bad order in header");
            g = Graph(order);
            have_header = true;
        } else {
            int u, v;
            if (!(fields >> u >> v))
                throw ParseError(lineno, "expected edge \"u v\"");
            if (u == v) throw ParseError(lineno, "self-loop");
            if (u < 0 || v < 0 || u >= g.order || v >= g.order)
                throw ParseError(lineno, "vertex id out of range");
            if (g.has_edge(u, v)) throw ParseError(lineno, "duplicate edge");
            g.add_edge(u, v);
        }
        std::string trailing;
        if (fields >> trailing && trailing[0] != '#')
            throw ParseError(lineno, "trailing characters: " + trailing);
    }
    if (!have_header) throw ParseError(lineno, "missing header \"n <order>\"");
    return g;
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

}  // namespace wedge
