#include "alphabound/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace alphabound {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    adj_.assign(static_cast<size_t>(n) + 1, {});
    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a < 1 || a > n || b < 1 || b > n) {
            throw std::invalid_argument("edge endpoint out of range: {" +
                                        std::to_string(a) + "," + std::to_string(b) + "}");
        }
        if (a == b) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        }
        normalized.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    edges_ = std::move(normalized);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 1; v <= n_; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        max_degree_ = std::max(max_degree_, static_cast<int>(adj_[v].size()));
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return adj_[v];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::adjacent(int u, int v) const {
    const auto& nu = neighbors(u);
    if (v < 1 || v > n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return std::binary_search(nu.begin(), nu.end(), v);
}

const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Singleton: return "Singleton";
        case GraphClass::Complete: return "Complete";
        case GraphClass::Cycle: return "Cycle";
        case GraphClass::Path: return "Path";
        case GraphClass::Other: return "Other";
    }
    return "?";
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    return Graph(n, edge_list);
}

std::vector<int> InducedSubgraph::lift(const std::vector<int>& vertices) const {
    std::vector<int> out;
    out.reserve(vertices.size());
    for (int v : vertices) {
        out.push_back(to_original.at(static_cast<size_t>(v)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) {
        throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
    }
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> to_new(static_cast<size_t>(g.num_vertices()) + 1, 0);
    std::vector<int> to_original(sorted.size() + 1, 0);
    for (size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 1 || v > g.num_vertices()) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        }
        to_new[v] = static_cast<int>(i) + 1;
        to_original[i + 1] = v;
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        if (to_new[u] != 0 && to_new[v] != 0) {
            edges.emplace_back(to_new[u], to_new[v]);
        }
    }
    return InducedSubgraph{Graph(static_cast<int>(sorted.size()), edges), std::move(to_original)};
}

ComponentPartition components(const Graph& g) {
    ComponentPartition partition;
    std::vector<bool> seen(static_cast<size_t>(g.num_vertices()) + 1, false);
    for (int start = 1; start <= g.num_vertices(); ++start) {
        if (seen[start]) continue;
        std::vector<int> part;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            part.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(part.begin(), part.end());
        if (part.size() == 1) partition.singleton_count++;
        partition.parts.push_back(std::move(part));
    }
    return partition;
}

bool is_connected(const Graph& g) {
    return components(g).parts.size() == 1;
}

GraphClass classify(const Graph& g) {
    if (!is_connected(g)) {
        throw std::invalid_argument("classify requires a connected graph");
    }
    int n = g.num_vertices();
    if (n == 1) return GraphClass::Singleton;
    long long m = g.num_edges();
    if (m == static_cast<long long>(n) * (n - 1) / 2) return GraphClass::Complete;
    if (n >= 3) {
        bool all_two = true;
        for (int v = 1; v <= n; ++v) {
            if (g.degree(v) != 2) { all_two = false; break; }
        }
        if (all_two) return GraphClass::Cycle;
    }
    int ones = 0;
    bool path_degrees = true;
    for (int v = 1; v <= n; ++v) {
        int d = g.degree(v);
        if (d == 1) ones++;
        else if (d != 2) { path_degrees = false; break; }
    }
    if (path_degrees && ones == 2) return GraphClass::Path;
    return GraphClass::Other;
}

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
    std::vector<bool> in(static_cast<size_t>(g.num_vertices()) + 1, false);
    for (int v : s) {
        if (v < 1 || v > g.num_vertices()) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        }
        in[v] = true;
    }
    for (const auto& [u, v] : g.edges()) {
        if (in[u] && in[v]) return false;
    }
    return true;
}

}  // namespace alphabound
