#pragma once

// Maximum matching in general graphs: Edmonds blossom algorithm, O(V^3),
// with a Gallai-Edmonds witness set certifying optimality via Tutte-Berge.

#include <queue>
#include <stdexcept>
#include <vector>

#include "covpack/graph.hpp"

namespace covpack {

struct Matching {
    std::vector<int> mate;                   // mate[v] or -1
    std::vector<std::pair<int, int>> edges;  // matched pairs, a < b
    int size = 0;
    std::vector<int> witness;  // Tutte-Berge set A (Gallai-Edmonds), may be empty
};

namespace detail {

struct Blossom {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match, p, base, root;
    std::vector<bool> used, blossom;

    explicit Blossom(const Graph& g) : n(g.n), adj(g.adj), match(g.n, -1) {}

    int lca(int a, int b) {
        std::vector<bool> onPath(n, false);
        for (int v = a;; v = p[match[v]]) {
            v = base[v];
            onPath[v] = true;
            if (match[v] == -1) break;
        }
        for (int v = b;; v = p[match[v]]) {
            v = base[v];
            if (onPath[v]) return v;
            if (match[v] == -1) break;
        }
        throw std::logic_error("blossom: lca not found");
    }

    void mark_path(int v, int b, int child, std::queue<int>& q) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
        (void)q;
    }

    // alternating BFS from `start` (or from all exposed vertices if start < 0,
    // used for the Gallai-Edmonds even set).  Returns an exposed tree leaf to
    // augment to, or -1.
    int find_path(int start) {
        used.assign(n, false);
        p.assign(n, -1);
        base.resize(n);
        root.assign(n, -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        std::queue<int> q;
        if (start >= 0) {
            used[start] = true;
            root[start] = start;
            q.push(start);
        } else {
            for (int v = 0; v < n; ++v)
                if (match[v] == -1) {
                    used[v] = true;
                    root[v] = v;
                    q.push(v);
                }
        }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (used[to]) {
                    // even-even edge: blossom if same tree, otherwise an
                    // augmenting path exists between two exposed roots
                    if (root[base[v]] != root[base[to]]) {
                        if (start < 0) throw std::logic_error("blossom: augmenting path in certification pass");
                        // cross-tree cannot happen in single-root search
                        throw std::logic_error("blossom: cross-tree even edge");
                    }
                    int curbase = lca(v, to);
                    blossom.assign(n, false);
                    mark_path(v, curbase, to, q);
                    mark_path(to, curbase, v, q);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = true;
                                root[i] = root[curbase];
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) {
                        if (start < 0) throw std::logic_error("blossom: exposed vertex reached in certification pass");
                        return to;
                    }
                    used[match[to]] = true;
                    root[match[to]] = root[base[v]];
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = p[v], ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }
};

}  // namespace detail

inline Matching max_matching(const Graph& g) {
    detail::Blossom bl(g);
    for (int v = 0; v < g.n; ++v) {
        if (bl.match[v] != -1) continue;
        int leaf = bl.find_path(v);
        if (leaf != -1) bl.augment(leaf);
    }
    Matching m;
    m.mate = bl.match;
    for (int v = 0; v < g.n; ++v)
        if (bl.match[v] > v) {
            m.edges.emplace_back(v, bl.match[v]);
            ++m.size;
        }
    // Gallai-Edmonds: D = even-reachable from exposed vertices, A = N(D) \ D
    if (g.n > 0) {
        bl.find_path(-1);
        std::vector<bool> inD = bl.used;
        std::vector<bool> inA(g.n, false);
        for (int v = 0; v < g.n; ++v)
            if (inD[v])
                for (int u : g.adj[v])
                    if (!inD[u]) inA[u] = true;
        for (int v = 0; v < g.n; ++v)
            if (inA[v]) m.witness.push_back(v);
    }
    return m;
}

// Tutte-Berge deficiency for a given removal set: oddComponents(G - U) - |U|
inline int tutte_berge_deficiency(const Graph& g, const std::vector<int>& U) {
    std::vector<bool> removed(g.n, false);
    for (int v : U) removed[v] = true;
    std::vector<int> comp(g.n, -1);
    int c = 0;
    std::vector<int> stack, sizes;
    for (int s = 0; s < g.n; ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        int sz = 0;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++sz;
            for (int u : g.adj[v])
                if (!removed[u] && comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
        sizes.push_back(sz);
        ++c;
    }
    int odd = 0;
    for (int sz : sizes) odd += sz % 2;
    return odd - static_cast<int>(U.size());
}

}  // namespace covpack
