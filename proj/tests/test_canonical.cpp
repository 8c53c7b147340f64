#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "wedge/canonical.hpp"
#include "wedge/census.hpp"
#include "wedge/families.hpp"
#include "wedge/graph6.hpp"

using namespace wedge;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order);
    for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

}  // namespace

TEST_CASE("canonical form is the permutation minimum") {
    CensusFilter filter;
    filter.max_order = 6;
    filter.connected = false;
    enumerate_connected(filter, [](const Graph& g) {
        Graph canon = canonical_form(g);
        CHECK(oracle::column_bits(canon) == oracle::permutation_min_bits(g));
        CHECK(canonical_code(g) == graph6_encode(canon));
    });
}

TEST_CASE("labeling invariance") {
    std::mt19937 rng(7);
    for (FamilyId id : {FamilyId::CYCLE, FamilyId::PATH, FamilyId::STAR}) {
        for (int n = 4; n <= 9; ++n) {
            Graph g = standard(id, {n});
            std::vector<int> perm(g.order);
            for (int i = 0; i < g.order; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_code(relabel(g, perm)) == canonical_code(g));
        }
    }
    Graph h = hstar();
    CHECK(canonical_code(relabel(h, {6, 5, 4, 3, 2, 1, 0})) ==
          canonical_code(h));
}

TEST_CASE("distinguishes non-isomorphic graphs") {
    CHECK(canonical_code(standard(FamilyId::COMPLETE, {3})) !=
          canonical_code(standard(FamilyId::PATH, {3})));
    // same degree sequence, different graphs: C6 vs two triangles
    Graph two_k3 = from_edge_list(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(canonical_code(two_k3) !=
          canonical_code(standard(FamilyId::CYCLE, {6})));
    CHECK(canonical_code(cartesian_product(standard(FamilyId::COMPLETE, {2}),
                                           standard(FamilyId::COMPLETE, {2}))) ==
          canonical_code(standard(FamilyId::CYCLE, {4})));
}

TEST_CASE("order bound") {
    CHECK(canonical_code(standard(FamilyId::CYCLE, {12})) ==
          canonical_code(relabel(standard(FamilyId::CYCLE, {12}),
                                 {5, 3, 8, 1, 0, 11, 2, 9, 4, 10, 6, 7})));
    CHECK_THROWS_AS(canonical_code(Graph(13)), std::invalid_argument);
}
