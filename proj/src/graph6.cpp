#include "graphzeta/graph6.hpp"

#include <vector>

namespace gz {

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw Graph6ParseError("empty line", 0);
    for (size_t i = 0; i < line.size(); ++i) {
        unsigned char c = line[i];
        if (c < 63 || c > 126)
            throw Graph6ParseError("character out of printable range 63..126", i);
    }
    if (line[0] == 126)
        throw Graph6ParseError("long-form length header not supported", 0);

    int n = line[0] - 63;
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t expect = 1 + (bits + 5) / 6;
    if (line.size() != expect)
        throw Graph6ParseError("wrong length for " + std::to_string(n) +
                                   " vertices: got " + std::to_string(line.size()) +
                                   " bytes, expected " + std::to_string(expect),
                               std::min(line.size(), expect));

    std::vector<Edge> edges;
    size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = line[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits beyond the triangle must be zero.
    for (size_t b = bits; b < (expect - 1) * 6; ++b) {
        int byte = line[1 + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1)
            throw Graph6ParseError("nonzero trailing padding bit", 1 + b / 6);
    }
    return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("to_graph6: graph has loops or parallel edges");
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("to_graph6: more than 62 vertices");

    auto adj = g.adjacency_counts();
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, char(63));
    out[0] = char(n + 63);
    size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (adj[i][j]) out[1 + bit / 6] += char(1 << (5 - bit % 6));
    return out;
}

}  // namespace gz
