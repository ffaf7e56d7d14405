#pragma once

#include <vector>

#include "graphzeta/graph.hpp"

namespace gz {

// One representative per isomorphism class of simple connected graphs on n
// vertices, by brute force over all 2^(n choose 2) labeled graphs with
// canonical dedup.  Supported for n <= 7; above that callers must supply a
// graph6 corpus file instead.
std::vector<Graph> enumerate_connected_graphs(int n);

// Grows a complete connected census on n vertices to one on n+1 by
// attaching a new vertex to every nonempty subset of each representative
// and deduplicating canonically.  Every connected graph on n+1 vertices
// contains a non-cut vertex, so this is exhaustive.
std::vector<Graph> extend_connected_census(const std::vector<Graph>& census);

}  // namespace gz
