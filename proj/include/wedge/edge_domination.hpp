#pragma once

#include <cstdint>
#include <functional>

#include "wedge/graph.hpp"

namespace wedge {

struct EdsCertificate {
    int gamma_prime = 0;
    int Gamma_prime = 0;
    EdgeList min_witness;
    EdgeList max_witness;
    bool is_wed = true;
    // False only for an early-exit result, where gamma_prime/Gamma_prime are
    // the sizes of the two exhibited minimal sets (bounds, not exact values).
    bool exact = true;
};

struct EdsEnumeration {
    std::uint64_t visited = 0;
    bool complete = false;  // search exhausted (limit not hit, visitor never stopped)
    int min_size = 0;       // over visited sets; 0 when none visited
    int max_size = 0;
};

// True iff N_e[F] = E(G); vacuously true for an edgeless graph and empty F.
bool is_edge_dominating(const Graph& g, const EdgeList& f);

// N_e[f] - N_e[F - {f}]; f may be its own private neighbor. Requires f in F.
EdgeList private_edge_neighbors(const Graph& g, const EdgeList& f_set,
                                const Edge& f);

// Dominating and every member keeps a private neighbor.
bool is_minimal_eds(const Graph& g, const EdgeList& f);

// Visits each minimal edge dominating set exactly once; visitor returning
// false stops the enumeration early.
EdsEnumeration enumerate_minimal_eds(
    const Graph& g, const std::function<bool(const EdgeList&)>& visitor,
    std::uint64_t limit);

// Exact gamma' and Gamma' with witnesses. With early_exit, stops as soon as
// two minimal sets of different sizes are seen and reports them as bounds.
EdsCertificate eds_certificate(const Graph& g, bool early_exit = false);

// Minimum size of an edge dominating set (branch and bound, no enumeration).
int gamma_prime(const Graph& g);

// gamma' = Gamma'; decided per component, with an equimatchability fast path
// (maximal matchings are minimal edge dominating sets, so unequal maximal
// matching sizes already refute it).
bool is_wed(const Graph& g);

}  // namespace wedge
