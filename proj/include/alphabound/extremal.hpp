#ifndef alphabound_extremal_hpp
#define alphabound_extremal_hpp

#include "alphabound/graph.hpp"

namespace alphabound {

enum class BasicFamily { Complete, Cycle, Path };

// Chain of j = ceil((n-1)/k) overlapping stars on [n]; max degree k,
// connected, and {1..n-j} is an independent set of size n - ceil((n-1)/k).
// Requires 1 <= k < n, with n = 2 when k = 1.
Graph gen_upper_extremal(int n, int k);

// Chain of ceil(n/k) cliques joined by bridge edges {ik, ik+1}; max degree k,
// connected, neither complete nor a cycle, independence number ceil(n/k).
// Requires 2 <= k < n.
Graph gen_lower_extremal(int n, int k);

// Circulant on 4m+2 vertices with connection set {1..m} mod n (residue 0
// mapped to vertex n). All degrees 2m; {1, 2m+2} is a maximal independent
// set of size 2. Requires m >= 1.
Graph gen_circulant_example(int m);

// Canonical labeled complete graph, cycle (1,...,n), or path <1,...,n>.
Graph gen_basic(BasicFamily family, int n);

}  // namespace alphabound

#endif
