#pragma once

#include <string>

#include "graphzeta/graph.hpp"

namespace gz {

// Opaque bytes identifying a multigraph up to isomorphism: two graphs get
// equal keys iff they are isomorphic.
using CanonicalKey = std::string;

// Canonical form by iterated color refinement plus a backtracking search
// over the remaining cell choices, pruned by automorphisms discovered along
// the way.  Edge multiplicities and loop counts are folded into the vertex
// invariants.  Intended for small graphs; throws if vertex_count > max_n.
CanonicalKey canonical_key(const Graph& g, int max_n = 12);

}  // namespace gz
