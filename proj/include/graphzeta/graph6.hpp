#pragma once

#include <stdexcept>
#include <string>

#include "graphzeta/graph.hpp"

namespace gz {

// Malformed graph6 input; offset is the byte position within the line.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, size_t offset)
        : std::runtime_error("graph6: " + what + " (byte " +
                             std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Parses the short graph6 form (n <= 62): header byte n+63, then the upper
// triangle of the adjacency matrix in column-major order, packed big-endian
// into 6-bit groups, each +63.  Long forms are rejected.
Graph parse_graph6(const std::string& line);

// Inverse of parse_graph6; g must be simple with at most 62 vertices.
std::string to_graph6(const Graph& g);

}  // namespace gz
