#ifndef alphabound_fuzz_hpp
#define alphabound_fuzz_hpp

#include <random>
#include <string>

#include "alphabound/graph.hpp"

namespace alphabound {

// Random spanning tree over a random vertex permutation, plus extra edges
// each present with probability p. Always connected; n >= 2.
Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_edge_probability);

// Plain G(n, p); may be disconnected or edgeless.
Graph random_graph(std::mt19937_64& rng, int n, double edge_probability);

// Cross-checks certificates, bounds, and the oracle on one graph.
// Returns an empty string when everything holds, else a description of the
// first violation.
std::string validate_instance(const Graph& g);

}  // namespace alphabound

#endif
