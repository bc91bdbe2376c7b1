#pragma once

// Plain undirected graph on vertices 0..n-1.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace covpack {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("make_graph: n < 0");
    Graph g;
    g.n = n;
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("make_graph: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("make_graph: self loop");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (const auto& [a, b] : g.edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    return g;
}

inline bool has_edge(const Graph& g, int a, int b) {
    if (a > b) std::swap(a, b);
    return std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(a, b));
}

// connected components after deleting the vertex set `removed`
inline int components_after_removal(const Graph& g, const std::vector<bool>& removed) {
    std::vector<int> comp(g.n, -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.adj[v])
                if (!removed[u] && comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
        ++c;
    }
    return c;
}

}  // namespace covpack
