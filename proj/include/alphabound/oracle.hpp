#ifndef alphabound_oracle_hpp
#define alphabound_oracle_hpp

#include <vector>

#include "alphabound/graph.hpp"

namespace alphabound {

struct OracleResult {
    int alpha = 0;
    std::vector<int> witness;  // sorted independent set of size alpha
};

// Exact independence number with a witness, by branch-and-bound per
// component (branch on a highest-degree vertex, prune with the
// degree-based per-component upper bound). Rejects graphs larger than
// `limit` vertices to keep runaway searches out of test harnesses.
OracleResult alpha_exact(const Graph& g, int limit = 40);

// True iff s is independent and dominates every vertex outside it.
bool is_maximal_independent(const Graph& g, const std::vector<int>& s);

}  // namespace alphabound

#endif
