#include "graphzeta/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gz {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (const Edge& e : edges_) check_edge(e.a, e.b);
    std::sort(edges_.begin(), edges_.end());
}

void Graph::check_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("Graph: edge endpoint out of range");
}

void Graph::add_edge(int u, int v) {
    check_edge(u, v);
    Edge e(u, v);
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

int Graph::multiplicity(int u, int v) const {
    Edge e(u, v);
    auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
    return static_cast<int>(hi - lo);
}

bool Graph::is_simple() const {
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].is_loop()) return false;
        if (i > 0 && edges_[i] == edges_[i - 1]) return false;
    }
    return true;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const Edge& e : edges_) {
        deg[e.a]++;
        deg[e.b]++;
    }
    return deg;
}

std::vector<std::vector<int>> Graph::adjacency_counts() const {
    std::vector<std::vector<int>> adj(n_, std::vector<int>(n_, 0));
    for (const Edge& e : edges_) {
        if (e.is_loop()) {
            adj[e.a][e.a]++;
        } else {
            adj[e.a][e.b]++;
            adj[e.b][e.a]++;
        }
    }
    return adj;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<std::vector<int>> nbr(n);
    for (const Edge& e : g.edges()) {
        if (!e.is_loop()) {
            nbr[e.a].push_back(e.b);
            nbr[e.b].push_back(e.a);
        }
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : nbr[v])
            if (!seen[w]) {
                seen[w] = true;
                count++;
                stack.push_back(w);
            }
    }
    return count == n;
}

int genus(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("genus: graph is not connected");
    return g.edge_count() - g.vertex_count() + 1;
}

Graph delete_edge(const Graph& g, Edge e) {
    if (g.multiplicity(e.a, e.b) == 0)
        throw std::invalid_argument("delete_edge: edge not present");
    std::vector<Edge> edges = g.edges();
    edges.erase(std::find(edges.begin(), edges.end(), e));
    return Graph(g.vertex_count(), std::move(edges));
}

Graph contract_edge(const Graph& g, Edge e) {
    if (e.is_loop()) throw std::invalid_argument("contract_edge: cannot contract a loop");
    if (g.multiplicity(e.a, e.b) == 0)
        throw std::invalid_argument("contract_edge: edge not present");
    int n = g.vertex_count();
    // Merge e.b into e.a, move the last vertex into slot e.b.
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v) map[v] = v;
    map[e.b] = e.a;
    if (e.b != n - 1) map[n - 1] = e.b;

    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    bool dropped = false;
    for (const Edge& f : g.edges()) {
        if (!dropped && f == e) {
            dropped = true;  // the contracted copy disappears
            continue;
        }
        edges.emplace_back(map[f.a], map[f.b]);
    }
    return Graph(n - 1, std::move(edges));
}

Graph wedge_sum(const Graph& g, int v, const Graph& h, int w) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (v < 0 || v >= ng || w < 0 || w >= nh)
        throw std::invalid_argument("wedge_sum: vertex index out of range");
    // h's vertex u maps to: v if u == w, otherwise the next free slot.
    std::vector<int> map(nh);
    int next = ng;
    for (int u = 0; u < nh; ++u) map[u] = (u == w) ? v : next++;

    Graph out(ng + nh - 1);
    std::vector<Edge> edges = g.edges();
    edges.reserve(g.edge_count() + h.edge_count());
    for (const Edge& e : h.edges()) edges.emplace_back(map[e.a], map[e.b]);
    return Graph(ng + nh - 1, std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.a], perm[e.b]);
    return Graph(g.vertex_count(), std::move(edges));
}

std::string edge_list_str(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ":";
    for (const Edge& e : g.edges()) out << " " << e.a << "-" << e.b;
    return out.str();
}

}  // namespace gz
