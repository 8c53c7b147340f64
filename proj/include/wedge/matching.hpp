#pragma once

#include "wedge/graph.hpp"

namespace wedge {

struct MatchingProfile {
    int alpha_prime = 0;  // maximum matching size
    int i_prime = 0;      // minimum maximal matching size
    bool has_perfect = false;
};

// True iff m is a matching in g and no edge of g avoids all its endpoints.
bool is_maximal_matching(const Graph& g, const EdgeList& m);

int maximum_matching_size(const Graph& g);
int minimum_maximal_matching_size(const Graph& g);
MatchingProfile matching_profile(const Graph& g);

bool has_perfect_matching(const Graph& g);
bool is_equimatchable(const Graph& g);      // i' = alpha'
bool is_randomly_matchable(const Graph& g); // equimatchable and alpha' = order/2

}  // namespace wedge
