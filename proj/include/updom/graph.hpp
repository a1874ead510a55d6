#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "updom/vertex_set.hpp"

namespace updom {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, adjacency stored as bit rows.
// No self-loops, no multi-edges. Built once, then treated as immutable;
// every operation below is a pure function, so graphs are safe to share
// across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int m() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighbors(int v) const {
        VertexSet s = adj_[v];
        s.add(v);
        return s;
    }
    int degree(int v) const { return adj_[v].size(); }

    // Rejects out-of-range ids and self-loops; adding an existing edge is a no-op.
    void add_edge(int u, int v);

    // Edges as (u, v) with u < v, ascending.
    std::vector<Edge> edge_list() const;

    VertexSet vertex_set() const { return VertexSet::full(n_); }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// Builds the simple graph with exactly the listed edges (duplicates allowed).
Graph make_graph(int n, const std::vector<Edge>& edges);

Graph complement(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
// A shortest cycle as a vertex sequence, or nullopt for forests.
std::optional<std::vector<int>> girth_cycle(const Graph& g);

int max_degree(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> new_id_of;  // old id -> new id, -1 for vertices outside s
    std::vector<int> old_id_of;  // new id -> old id
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Injective map phi: V(h) -> V(g) with uv in E(h) iff phi(u)phi(v) in E(g),
// or nullopt if g contains no induced copy of h. Deterministic.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

struct InducedWitness {
    int pattern_index = -1;
    std::vector<int> embedding;
};
// First pattern of the family (by index) that embeds into g as an induced
// subgraph, or nullopt if g is family-free.
std::optional<InducedWitness> find_induced(const Graph& g, const std::vector<Graph>& family);
bool is_free(const Graph& g, const std::vector<Graph>& family);

// Verifies that phi is an induced embedding of h into g.
bool check_embedding(const Graph& g, const Graph& h, const std::vector<int>& phi);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);

// Two independent sets covering V, or nullopt when g has an odd cycle.
std::optional<std::array<VertexSet, 2>> is_bipartite(const Graph& g);
// Two cliques covering V, or nullopt; g is co-bipartite iff complement(g) is bipartite.
std::optional<std::array<VertexSet, 2>> is_cobipartite(const Graph& g);

bool graphs_equal(const Graph& a, const Graph& b);

// Exhaustive isomorphism test for small graphs (used by round-trip checks).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace updom
