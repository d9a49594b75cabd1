#ifndef alphabound_graph_hpp
#define alphabound_graph_hpp

#include <utility>
#include <vector>

namespace alphabound {

// Immutable simple undirected graph on vertices 1..n.
// Neighbor lists are kept sorted so that every algorithm in this library
// iterates vertices in a deterministic order.
class Graph {
public:
    // Duplicate edges in the input collapse to one; self-loops and
    // out-of-range endpoints are rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    // Edges normalized to (min,max) and sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const { return max_degree_; }
    bool adjacent(int u, int v) const;

private:
    int n_;
    int max_degree_ = 0;
    std::vector<std::vector<int>> adj_;  // 1-based, adj_[0] unused
    std::vector<std::pair<int, int>> edges_;
};

enum class GraphClass { Singleton, Complete, Cycle, Path, Other };

const char* to_string(GraphClass c);

// Induced subgraph with vertices renumbered 1..|W|; to_original translates
// back to the parent graph's identifiers.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // 1-based: to_original[w] = original id

    // Translate a vertex set of the subgraph back to original identifiers.
    std::vector<int> lift(const std::vector<int>& vertices) const;
};

struct ComponentPartition {
    std::vector<std::vector<int>> parts;  // sorted vertex sets, sorted by minimum
    int singleton_count = 0;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// W must be a nonempty subset of the vertices.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

ComponentPartition components(const Graph& g);

bool is_connected(const Graph& g);

// Connected graphs only; classification is exclusive (complete wins over
// cycle/path, so K_2 is Complete and K_3 is Complete).
GraphClass classify(const Graph& g);

// True iff no edge has both endpoints in s; the empty set is independent.
bool is_independent_set(const Graph& g, const std::vector<int>& s);

}  // namespace alphabound

#endif
