#include "alphabound/io.hpp"

#include <sstream>

namespace alphabound {

namespace {

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = 0;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (m < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0) {
                throw ParseError(lineno, "expected header \"n m\"");
            }
            continue;
        }
        int u = 0, v = 0;
        if (!(ls >> u >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw ParseError(lineno, "expected edge \"u v\"");
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError(lineno, "vertex out of range [1," + std::to_string(n) + "]");
        }
        if (u == v) {
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        }
        edges.emplace_back(u, v);
    }
    if (m < 0) throw ParseError(lineno, "missing header");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(lineno, "header announced " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    }
    return Graph(n, edges);
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = 0;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (m >= 0) throw ParseError(lineno, "duplicate problem line");
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 1 || m < 0) {
                throw ParseError(lineno, "expected \"p edge n m\"");
            }
            continue;
        }
        if (tag == "e") {
            if (m < 0) throw ParseError(lineno, "edge before problem line");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected \"e u v\"");
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError(lineno, "vertex out of range [1," + std::to_string(n) + "]");
            }
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u, v);
            continue;
        }
        throw ParseError(lineno, "unknown line tag \"" + tag + "\"");
    }
    if (m < 0) throw ParseError(lineno, "missing problem line");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(lineno, "problem line announced " + std::to_string(m) +
                                     " edges, found " + std::to_string(edges.size()));
    }
    return Graph(n, edges);
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_dimacs(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::EdgeList) {
        out << g.num_vertices() << ' ' << g.num_edges() << '\n';
        for (const auto& [u, v] : g.edges()) {
            out << u << ' ' << v << '\n';
        }
    } else {
        out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
        for (const auto& [u, v] : g.edges()) {
            out << "e " << u << ' ' << v << '\n';
        }
    }
    return out.str();
}

}  // namespace alphabound
