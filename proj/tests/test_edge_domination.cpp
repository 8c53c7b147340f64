#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "wedge/census.hpp"
#include "wedge/edge_domination.hpp"
#include "wedge/families.hpp"

using namespace wedge;

namespace {

Graph cycle(int n) { return standard(FamilyId::CYCLE, {n}); }
Graph path(int n) { return standard(FamilyId::PATH, {n}); }
Graph complete(int n) { return standard(FamilyId::COMPLETE, {n}); }
Graph biclique(int r, int s) { return standard(FamilyId::BICLIQUE, {r, s}); }

std::set<int> minimal_sizes(const Graph& g) {
    std::set<int> sizes;
    enumerate_minimal_eds(
        g,
        [&](const EdgeList& f) {
            sizes.insert(static_cast<int>(f.size()));
            return true;
        },
        ~0ull);
    return sizes;
}

}  // namespace

TEST_CASE("edge domination recognition") {
    Graph c5 = cycle(5);
    CHECK(is_edge_dominating(c5, {{0, 1}, {2, 3}}));
    CHECK(!is_edge_dominating(c5, {{0, 1}}));
    CHECK(is_edge_dominating(path(4), {{1, 2}}));
    CHECK(is_edge_dominating(Graph(3), {}));
    CHECK_THROWS_AS(is_edge_dominating(c5, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("private edge neighbors") {
    // in K_{2,2} each member of a perfect matching is its own private edge
    Graph k22 = biclique(2, 2);
    EdgeList pm = {{0, 2}, {1, 3}};
    CHECK(private_edge_neighbors(k22, pm, {0, 2}) == EdgeList{{0, 2}});
    CHECK(private_edge_neighbors(k22, pm, {1, 3}) == EdgeList{{1, 3}});

    Graph k3 = complete(3);
    CHECK(private_edge_neighbors(k3, {{0, 1}}, {0, 1}) ==
          EdgeList{{0, 1}, {0, 2}, {1, 2}});

    Graph c5 = cycle(5);
    EdgeList f = {{0, 1}, {1, 2}, {3, 4}};
    CHECK(private_edge_neighbors(c5, f, {1, 2}).empty());
    CHECK_THROWS_AS(private_edge_neighbors(c5, f, {2, 3}),
                    std::invalid_argument);
}

TEST_CASE("minimal edge dominating sets") {
    Graph c5 = cycle(5);
    CHECK(is_minimal_eds(c5, {{0, 1}, {2, 3}}));
    CHECK(!is_minimal_eds(c5, {{0, 1}}));                    // not dominating
    CHECK(!is_minimal_eds(c5, {{0, 1}, {1, 2}, {3, 4}}));    // (1,2) redundant

    // every pair of edges of C4 is a minimal EDS, and nothing else is
    EdsEnumeration all = enumerate_minimal_eds(
        cycle(4), [](const EdgeList&) { return true; }, ~0ull);
    CHECK(all.visited == 6);
    CHECK(all.complete);
    CHECK(all.min_size == 2);
    CHECK(all.max_size == 2);

    EdsEnumeration capped = enumerate_minimal_eds(
        cycle(4), [](const EdgeList&) { return true; }, 3);
    CHECK(capped.visited == 3);
    CHECK(!capped.complete);

    EdsEnumeration stopped = enumerate_minimal_eds(
        cycle(4), [](const EdgeList&) { return false; }, ~0ull);
    CHECK(stopped.visited == 1);
    CHECK(!stopped.complete);

    EdsEnumeration none = enumerate_minimal_eds(
        Graph(2), [](const EdgeList&) { return true; }, ~0ull);
    CHECK(none.visited == 1);  // the empty set dominates an edgeless graph
    CHECK(none.min_size == 0);
}

TEST_CASE("gamma and Gamma on fixtures") {
    EdsCertificate k5 = eds_certificate(complete(5));
    CHECK(k5.gamma_prime == 2);
    CHECK(k5.Gamma_prime == 3);
    CHECK(!k5.is_wed);
    CHECK(k5.exact);
    CHECK(is_minimal_eds(complete(5), k5.min_witness));
    CHECK(is_minimal_eds(complete(5), k5.max_witness));
    CHECK(static_cast<int>(k5.min_witness.size()) == 2);
    CHECK(static_cast<int>(k5.max_witness.size()) == 3);

    EdsCertificate p4 = eds_certificate(path(4), true);
    CHECK(!p4.is_wed);
    CHECK(!p4.exact);
    CHECK(p4.gamma_prime != p4.Gamma_prime);

    CHECK(eds_certificate(cycle(7)).gamma_prime == 3);
    CHECK(gamma_prime(complete(5)) == 2);
    CHECK(gamma_prime(cycle(7)) == 3);
    CHECK(gamma_prime(standard(FamilyId::STAR, {6})) == 1);
    CHECK(gamma_prime(Graph(3)) == 0);
    CHECK(minimal_sizes(build({FamilyId::H3, {}})) == std::set<int>{2});
    CHECK(minimal_sizes(build({FamilyId::F12, {{"n", 1}}})) ==
          std::set<int>{4, 5});
}

TEST_CASE("well-edge-dominated fixtures") {
    CHECK(is_wed(cycle(4)));
    CHECK(is_wed(cycle(5)));
    CHECK(!is_wed(cycle(6)));
    CHECK(is_wed(cycle(7)));
    CHECK(!is_wed(path(4)));
    CHECK(is_wed(complete(4)));
    CHECK(!is_wed(complete(5)));
    CHECK(!is_wed(biclique(2, 3)));
    CHECK(is_wed(biclique(3, 3)));
    CHECK(is_wed(hstar()));

    // componentwise: edgeless parts are ignored, one bad part refutes
    Graph two_k2 = from_edge_list(5, {{0, 1}, {2, 3}});
    CHECK(is_wed(two_k2));
    Graph with_p4 = from_edge_list(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(!is_wed(with_p4));
    CHECK(is_wed(Graph(4)));
}

TEST_CASE("certificate agrees with the subset oracle up to order 6") {
    CensusFilter filter;
    filter.max_order = 6;
    enumerate_connected(filter, [](const Graph& g) {
        oracle::SubsetInvariants ref = oracle::subset_invariants(g);
        EdsCertificate cert = eds_certificate(g);
        CHECK(cert.gamma_prime == ref.gamma_prime);
        CHECK(cert.Gamma_prime == ref.Gamma_prime);
        CHECK(gamma_prime(g) == ref.gamma_prime);
        CHECK(minimal_sizes(g) == ref.minimal_eds_sizes);
        CHECK(is_wed(g) == (ref.gamma_prime == ref.Gamma_prime));
    });
}
