#pragma once

// Test-only oracles, deliberately independent of the library implementations
// they are used to check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "updom/graph.hpp"

namespace updom::testing {

// Induced-subgraph containment by exhaustive search over all injective maps
// (choose |h| host vertices, try every assignment order). Factorial; patterns
// and hosts must be tiny.
inline bool exhaustive_contains_induced(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return false;
    std::vector<int> hosts(g.n());
    std::iota(hosts.begin(), hosts.end(), 0);
    std::vector<int> pick(h.n());
    std::vector<bool> used(g.n(), false);
    // enumerate injections recursively in lexicographic order
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == h.n()) {
            for (int u = 0; u < h.n(); ++u)
                for (int v = u + 1; v < h.n(); ++v)
                    if (h.has_edge(u, v) != g.has_edge(pick[u], pick[v])) return false;
            return true;
        }
        for (int cand = 0; cand < g.n(); ++cand) {
            if (used[cand]) continue;
            used[cand] = true;
            pick[depth] = cand;
            if (rec(depth + 1)) {
                used[cand] = false;
                return true;
            }
            used[cand] = false;
        }
        return false;
    };
    return rec(0);
}

// Girth via one BFS per edge: the shortest cycle through edge uv is
// 1 + dist(u, v) in the graph without that edge.
inline std::optional<int> girth_by_edge_removal(const Graph& g) {
    std::optional<int> best;
    for (auto [u, v] : g.edge_list()) {
        std::vector<int> dist(g.n(), -1);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int y = g.neighbors(x).first(); y != -1; y = g.neighbors(x).next_after(y)) {
                if ((x == u && y == v) || (x == v && y == u)) continue;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[v] != -1 && (!best || dist[v] + 1 < *best)) best = dist[v] + 1;
    }
    return best;
}

// The Petersen graph: outer cycle, inner pentagram, spokes.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

}  // namespace updom::testing
