#ifndef alphabound_augment_hpp
#define alphabound_augment_hpp

#include <vector>

#include "alphabound/graph.hpp"
#include "alphabound/greedy.hpp"

namespace alphabound {

enum class Tier { Baseline, Refined };

enum class Branch {
    PathOrCycle,
    CompleteGraph,
    NotDivisible,
    GreedySlack,
    FrontierPair,
    DescentCaseI,
    DescentCaseII,
    BaseNonComplete,
    ComponentUnion,
};

const char* to_string(Tier t);
const char* to_string(Branch b);

// An independent set together with the bound value it attains and the
// branch of the algorithm that produced it.
struct Certificate {
    std::vector<int> set;  // sorted
    int guarantee = 0;
    Tier tier = Tier::Baseline;
    Branch branch = Branch::PathOrCycle;
};

// One level of the descent through the edge-augmented working graphs.
// w is the frontier vertex with a (unique) neighbor y below; w_prime is the
// lowest frontier vertex not adjacent to y, y_prime its unique neighbor
// below (or y when it has none); edge_added records whether {y, y_prime}
// had to be inserted.
struct LevelRecord {
    int level = 0;
    int w = 0;
    int y = 0;
    int w_prime = 0;
    int y_prime = 0;
    bool edge_added = false;

    bool operator==(const LevelRecord&) const = default;
};

// An overlay edge inserted by the descent; it belongs to every working
// graph from `first_level` downward.
struct AddedEdge {
    int u = 0;
    int v = 0;
    int first_level = 0;

    bool operator==(const AddedEdge&) const = default;
};

struct DescentOutcome {
    std::vector<LevelRecord> levels;  // level m first, down to level r
    bool case_one = false;
    int r = 0;
    int x = 0;        // Case I pair, x < x_prime
    int x_prime = 0;
    int w_double_prime = 0;  // Case II frontier vertex with no neighbor below
    std::vector<AddedEdge> added_edges;  // overlay accumulated by the descent
};

// Certificate for a connected graph with n >= 2: dispatch on graph class,
// then greedy / frontier-pair / descent+ascent as needed. The returned set
// is verified independent; the guarantee is ceil((n-1)/k) for complete
// graphs and cycles and ceil(n/k) otherwise.
Certificate solve_connected(const Graph& g);

// Shrink through the working graphs until a frontier level holds two
// non-adjacent vertices (Case I) or level 1 is complete (Case II).
// Preconditions: k >= 3, k divides n-1, m = (n-1)/k >= 2, every increment
// has size k, and the last increment is a clique.
DescentOutcome descend(const Graph& g, const GreedyTrace& trace);

// Rebuild an independent set of size m+1 from the descent outcome, one
// frontier vertex per level. Verified independent in the original graph.
std::vector<int> ascend(const Graph& g, const GreedyTrace& trace, const DescentOutcome& outcome);

// Component-wise certificate for any graph: solve_connected per
// non-singleton component, every singleton included.
Certificate solve_general(const Graph& g);

// True iff the certificate's set is independent in g and at least as large
// as its guarantee.
bool verify_certificate(const Graph& g, const Certificate& cert);

}  // namespace alphabound

#endif
