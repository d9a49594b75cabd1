#ifndef alphabound_io_hpp
#define alphabound_io_hpp

#include <stdexcept>
#include <string>

#include "alphabound/graph.hpp"

namespace alphabound {

enum class GraphFormat { EdgeList, Dimacs };

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
};

// EdgeList: first line "n m", then m lines "u v" (1-based).
// Dimacs: "c" comment lines, one "p edge n m" line, then "e u v" lines.
Graph parse_graph(const std::string& text, GraphFormat format);

// Edges emitted sorted on (min,max); round-trips with parse_graph.
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace alphabound

#endif
