#pragma once

#include <string>
#include <vector>

namespace gz {

// Unordered vertex pair; a loop has a == b.  Stored normalized (a <= b).
struct Edge {
    int a = 0, b = 0;

    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

    bool is_loop() const { return a == b; }
    bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
    bool operator<(const Edge& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
};

// Finite multigraph on vertices 0..n-1.  Loops and parallel edges are
// permitted (the Tutte recursion creates both); graphs coming from external
// input are required to be simple.  The edge list is kept sorted, so
// equality is multiset equality.  Instances are treated as immutable once
// built and are safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {}
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    void add_edge(int u, int v);  // keeps the list sorted

    int multiplicity(int u, int v) const;
    int loop_count(int v) const { return multiplicity(v, v); }
    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

    bool is_simple() const;  // no loops, no parallel edges
    // Degree counts edge multiplicity; a loop contributes 2.
    std::vector<int> degrees() const;
    // Multiplicity matrix; entry [v][v] holds the loop count of v.
    std::vector<std::vector<int>> adjacency_counts() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_edge(int u, int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);
int genus(const Graph& g);  // m - n + 1; requires a connected graph

// Removes one copy of e.
Graph delete_edge(const Graph& g, Edge e);
// Merges the endpoints of e (the contracted vertex takes the smaller
// index's slot and the last vertex fills the gap).  Other copies of a
// multiplicity-k parallel class become k-1 loops; all remaining
// adjacencies keep their multiplicities.  e must not be a loop.
Graph contract_edge(const Graph& g, Edge e);

// One-point union: v in g is identified with w in h.  Vertices of g keep
// their indices; vertices of h other than w follow, in order.
Graph wedge_sum(const Graph& g, int v, const Graph& h, int w);

// Relabels vertices: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

std::string edge_list_str(const Graph& g);  // debugging aid

}  // namespace gz
