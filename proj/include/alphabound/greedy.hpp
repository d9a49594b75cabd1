#ifndef alphabound_greedy_hpp
#define alphabound_greedy_hpp

#include <vector>

#include "alphabound/graph.hpp"

namespace alphabound {

// Full record of the frontier expansion: chosen[i-1] is v_i, covered[i-1]
// is V_i = {v_1..v_i} together with all their neighbors, increments[i-1] is
// W_i = V_i \ V_{i-1} (with W_1 = V_1), and witnesses[i-1] is the vertex of
// V_i adjacent to v_{i+1}. All vertex sets are sorted.
struct GreedyTrace {
    std::vector<int> chosen;
    std::vector<std::vector<int>> covered;
    std::vector<std::vector<int>> increments;
    std::vector<int> witnesses;

    int steps() const { return static_cast<int>(chosen.size()); }
};

// Frontier expansion on a connected graph with n >= 2. Deterministic:
// v_1 is the lowest vertex of maximum degree, each later v_i is the lowest
// uncovered vertex adjacent to the covered region, and the witness is the
// lowest covered neighbor of v_i. The chosen vertices form an independent
// set of size >= ceil((n-1)/max_degree).
GreedyTrace greedy_expand(const Graph& g);

// True iff some increment W_i (i >= 2) is strictly smaller than k. When
// true and k divides n-1, the chosen set beats (n-1)/k by at least one.
bool greedy_slack(const GreedyTrace& trace, int k);

}  // namespace alphabound

#endif
