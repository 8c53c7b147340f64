#include "wedge/graph6.hpp"

#include <stdexcept>

namespace wedge {

std::string graph6_encode(const Graph& g) {
    if (g.order > 62)
        throw std::invalid_argument("graph6_encode: order over 62");
    std::string out;
    out.push_back(static_cast<char>(g.order + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.order; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    for (std::size_t i = 0; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte " + std::to_string(i) +
                                        " outside 63..126");
    }
    int order = line[0] - 63;
    if (order == 63)
        throw std::invalid_argument("graph6: long form (order > 62) unsupported");
    int pair_bits = order * (order - 1) / 2;
    std::size_t want = 1 + (pair_bits + 5) / 6;
    if (line.size() < want) throw std::invalid_argument("graph6: truncated payload");
    if (line.size() > want) throw std::invalid_argument("graph6: payload too long");
    Graph g(order);
    int bit = 0;
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int group = line[1 + bit / 6] - 63;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    // padding bits of the last group must be zero
    for (; bit % 6 != 0; ++bit) {
        int group = line[1 + bit / 6] - 63;
        if ((group >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace wedge
