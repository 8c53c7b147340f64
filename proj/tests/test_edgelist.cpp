#include <sstream>

#include "doctest.h"
#include "wedge/edgelist.hpp"
#include "wedge/families.hpp"

using namespace wedge;

TEST_CASE("parses documents with comments") {
    Graph g = parse_edge_list_text(
        "# a triangle with a tail\n"
        "n 4\n"
        "0 1\n"
        "1 2\n"
        "0 2   # closes the triangle\n"
        "\n"
        "2 3\n");
    CHECK(g.order == 4);
    CHECK(g.size() == 4);
    CHECK(g.has_edge(0, 2));

    CHECK(parse_edge_list_text("n 0\n").order == 0);
    CHECK(parse_edge_list_text("  n   3  \n").size() == 0);
}

TEST_CASE("rejections name the offending line") {
    auto line_of = [](const std::string& text) {
        try {
            parse_edge_list_text(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("0 1\n") == 1);                      // header missing
    CHECK(line_of("n x\n") == 1);                      // bad order
    CHECK(line_of("n -1\n") == 1);
    CHECK(line_of("n 3\n0 1\n1 1\n") == 3);            // self-loop
    CHECK(line_of("n 3\n0 1\n0 3\n") == 3);            // out of range
    CHECK(line_of("n 3\n# ok\n0 1\n0 1\n") == 4);      // duplicate
    CHECK(line_of("n 3\n0 1 junk\n") == 2);            // trailing tokens
    CHECK(line_of("n 3\n0\n") == 2);                   // incomplete edge
    CHECK(line_of("# only comments\n") == 1);
    CHECK(line_of("") == 0);
}

TEST_CASE("round trip") {
    Graph h = hstar();
    CHECK(parse_edge_list_text(emit_edge_list(h)) == h);
    CHECK(emit_edge_list(from_edge_list(3, {{1, 2}, {0, 1}})) ==
          "n 3\n0 1\n1 2\n");
    std::istringstream in("n 2\n0 1\n");
    CHECK(parse_edge_list(in).size() == 1);
}
