#include "graphzeta/enumerate.hpp"

#include <stdexcept>
#include <unordered_set>

#include "graphzeta/canonical.hpp"

namespace gz {

namespace {

// Connectivity of a labeled graph given as an edge bitmask over the
// upper-triangle pairs (0,1),(0,2),(1,2),(0,3),...
bool mask_connected(int n, unsigned long mask) {
    unsigned reach = 1u;  // bitset of vertices reached from 0
    unsigned all = (1u << n) - 1;
    for (int round = 0; round < n && reach != all; ++round) {
        unsigned next = reach;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1) {
                    bool ri = (reach >> i) & 1, rj = (reach >> j) & 1;
                    if (ri != rj) next |= (1u << i) | (1u << j);
                }
        if (next == reach) break;
        reach = next;
    }
    return reach == all;
}

Graph mask_to_graph(int n, unsigned long mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_connected_graphs: n must be >= 1");
    if (n > 7)
        throw std::invalid_argument(
            "enumerate_connected_graphs: built-in enumeration stops at n = 7; "
            "supply a graph6 corpus file for larger n");

    std::vector<Graph> out;
    std::unordered_set<CanonicalKey> seen;
    int pairs = n * (n - 1) / 2;
    for (unsigned long mask = 0; mask < (1ul << pairs); ++mask) {
        if (!mask_connected(n, mask)) continue;
        Graph g = mask_to_graph(n, mask);
        if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> extend_connected_census(const std::vector<Graph>& census) {
    std::vector<Graph> out;
    std::unordered_set<CanonicalKey> seen;
    for (const Graph& g : census) {
        int n = g.vertex_count();
        for (unsigned subset = 1; subset < (1u << n); ++subset) {
            std::vector<Edge> edges = g.edges();
            for (int v = 0; v < n; ++v)
                if ((subset >> v) & 1) edges.emplace_back(v, n);
            Graph h(n + 1, std::move(edges));
            if (seen.insert(canonical_key(h)).second) out.push_back(std::move(h));
        }
    }
    return out;
}

}  // namespace gz
