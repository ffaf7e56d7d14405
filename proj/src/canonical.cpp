#include "graphzeta/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gz {

namespace {

struct CanonSearch {
    int n;
    std::vector<std::vector<int>> adj;  // multiplicity matrix, loops on diagonal

    std::string best;                    // smallest leaf string found so far
    std::vector<int> best_lab;           // vertex -> position for best
    std::vector<std::vector<int>> autos; // discovered automorphisms

    // colors[v] in 0..n-1; a coloring is discrete when every color class
    // has one vertex, in which case colors is itself the labeling.
    void refine(std::vector<int>& colors) const {
        using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
        while (true) {
            std::vector<Sig> sig(n);
            for (int v = 0; v < n; ++v) {
                sig[v].first = colors[v];
                for (int u = 0; u < n; ++u)
                    if (u != v && adj[v][u] > 0)
                        sig[v].second.emplace_back(colors[u], adj[v][u]);
                std::sort(sig[v].second.begin(), sig[v].second.end());
            }
            std::vector<Sig> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            bool changed = false;
            for (int v = 0; v < n; ++v) {
                int c = static_cast<int>(
                    std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                    sorted.begin());
                if (c != colors[v]) changed = true;
                colors[v] = c;
            }
            if (!changed) return;
        }
    }

    // Renumbers colors so that vertex w sits alone in a class ordered just
    // before the rest of its old class.
    static std::vector<int> individualize(const std::vector<int>& colors, int w) {
        std::vector<int> out(colors.size());
        for (size_t v = 0; v < colors.size(); ++v) {
            out[v] = 2 * colors[v];
            if (colors[v] == colors[w] && static_cast<int>(v) != w) out[v]++;
        }
        return out;
    }

    std::string leaf_string(const std::vector<int>& lab) const {
        std::vector<int> vert(n);  // position -> vertex
        for (int v = 0; v < n; ++v) vert[lab[v]] = v;
        std::string s;
        s.reserve(1 + n * (n + 1) / 2);
        s.push_back(static_cast<char>(n));
        for (int q = 1; q < n; ++q)
            for (int p = 0; p < q; ++p) {
                int m = adj[vert[p]][vert[q]];
                if (m > 255) throw std::invalid_argument(
                    "canonical_key: edge multiplicity above 255");
                s.push_back(static_cast<char>(m));
            }
        for (int p = 0; p < n; ++p)
            s.push_back(static_cast<char>(std::min(adj[vert[p]][vert[p]], 255)));
        return s;
    }

    void record_leaf(const std::vector<int>& lab) {
        std::string s = leaf_string(lab);
        if (best.empty() || s < best) {
            best = std::move(s);
            best_lab = lab;
        } else if (s == best) {
            // lab and best_lab induce the same string, so
            // a = best_lab^{-1} . lab is an automorphism.
            std::vector<int> inv(n);
            for (int v = 0; v < n; ++v) inv[best_lab[v]] = v;
            std::vector<int> a(n);
            for (int v = 0; v < n; ++v) a[v] = inv[lab[v]];
            autos.push_back(std::move(a));
        }
    }

    void search(std::vector<int> colors, const std::vector<int>& path) {
        refine(colors);

        // Find the first non-singleton color class.
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) count[colors[v]]++;
        int cell = -1;
        for (int c = 0; c < n; ++c)
            if (count[c] > 1) {
                cell = c;
                break;
            }
        if (cell < 0) {
            record_leaf(colors);
            return;
        }

        std::vector<int> candidates;
        for (int v = 0; v < n; ++v)
            if (colors[v] == cell) candidates.push_back(v);

        // Orbit pruning: vertices equivalent under already-found
        // automorphisms that fix the individualized path pointwise lead to
        // identical subtrees.
        std::vector<int> uf(n);
        for (int v = 0; v < n; ++v) uf[v] = v;
        auto find = [&](int v) {
            while (uf[v] != v) v = uf[v] = uf[uf[v]];
            return v;
        };
        for (const auto& a : autos) {
            bool fixes_path = true;
            for (int p : path)
                if (a[p] != p) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path) continue;
            for (int v = 0; v < n; ++v) {
                int r1 = find(v), r2 = find(a[v]);
                if (r1 != r2) uf[r1] = r2;
            }
        }

        std::vector<bool> seen_orbit(n, false);
        for (int w : candidates) {
            int root = find(w);
            if (seen_orbit[root]) continue;
            seen_orbit[root] = true;
            std::vector<int> next_path = path;
            next_path.push_back(w);
            search(individualize(colors, w), next_path);
        }
    }
};

}  // namespace

CanonicalKey canonical_key(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > max_n)
        throw std::invalid_argument("canonical_key: graph has " +
                                    std::to_string(n) +
                                    " vertices, bound is " +
                                    std::to_string(max_n));
    if (n == 0) return std::string(1, '\0');

    CanonSearch cs;
    cs.n = n;
    cs.adj = g.adjacency_counts();

    // Initial colors from (loop count, degree), ranked.
    std::vector<int> deg(n, 0);
    for (const Edge& e : g.edges()) {
        deg[e.a]++;
        deg[e.b]++;
    }
    std::vector<std::pair<int, int>> inv(n);
    for (int v = 0; v < n; ++v) inv[v] = {cs.adj[v][v], deg[v]};
    auto sorted = inv;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v)
        colors[v] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), inv[v]) -
            sorted.begin());

    cs.search(std::move(colors), {});
    return cs.best;
}

}  // namespace gz
