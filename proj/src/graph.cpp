#include "updom/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace updom {

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
    if (n < 0) throw PreconditionError("negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n_));
    if (u == v)
        throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v)) return;
    adj_[u].add(v);
    adj_[v].add(u);
    ++m_;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next_after(u); v != -1; v = adj_[u].next_after(v))
            edges.emplace_back(u, v);
    return edges;
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

namespace {

// Shortest cycle found by a BFS rooted at r: the first non-tree edge closing
// two branches gives dist[x] + dist[y] + 1. The minimum over all roots is the
// girth (for a root on a shortest cycle the bound is attained).
struct RootedCycle {
    int length;
    std::vector<int> cycle;
};

std::optional<RootedCycle> bfs_cycle(const Graph& g, int r) {
    const int n = g.n();
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{r};
    dist[r] = 0;
    std::optional<RootedCycle> best;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y = g.neighbors(x).first(); y != -1; y = g.neighbors(x).next_after(y)) {
            if (dist[y] == -1) {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            } else if (y != parent[x]) {
                int len = dist[x] + dist[y] + 1;
                if (best && best->length <= len) continue;
                // walk both branches to the root, then trim the common tail
                std::vector<int> px, py;
                for (int a = x; a != -1; a = parent[a]) px.push_back(a);
                for (int a = y; a != -1; a = parent[a]) py.push_back(a);
                while (px.size() >= 2 && py.size() >= 2 &&
                       px[px.size() - 1] == py[py.size() - 1] &&
                       px[px.size() - 2] == py[py.size() - 2]) {
                    px.pop_back();
                    py.pop_back();
                }
                std::vector<int> cyc(px.begin(), px.end());
                for (size_t i = py.size() - 1; i >= 1; --i) cyc.push_back(py[i - 1]);
                best = RootedCycle{int(cyc.size()), std::move(cyc)};
            }
        }
    }
    return best;
}

}  // namespace

std::optional<std::vector<int>> girth_cycle(const Graph& g) {
    std::optional<RootedCycle> best;
    for (int r = 0; r < g.n(); ++r) {
        auto c = bfs_cycle(g, r);
        if (c && (!best || c->length < best->length)) best = c;
    }
    if (!best) return std::nullopt;
    return best->cycle;
}

std::optional<int> girth(const Graph& g) {
    auto c = girth_cycle(g);
    if (!c) return std::nullopt;
    return int(c->size());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n())
        throw PreconditionError("vertex set not over this graph");
    InducedSubgraph r;
    r.new_id_of.assign(g.n(), -1);
    r.old_id_of = s.to_vector();
    for (size_t i = 0; i < r.old_id_of.size(); ++i) r.new_id_of[r.old_id_of[i]] = int(i);
    Graph h(int(r.old_id_of.size()));
    for (size_t i = 0; i < r.old_id_of.size(); ++i)
        for (size_t j = i + 1; j < r.old_id_of.size(); ++j)
            if (g.has_edge(r.old_id_of[i], r.old_id_of[j])) h.add_edge(int(i), int(j));
    r.graph = std::move(h);
    return r;
}

bool check_embedding(const Graph& g, const Graph& h, const std::vector<int>& phi) {
    if (int(phi.size()) != h.n()) return false;
    std::vector<bool> used(g.n(), false);
    for (int v : phi) {
        if (v < 0 || v >= g.n() || used[v]) return false;
        used[v] = true;
    }
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v)
            if (h.has_edge(u, v) != g.has_edge(phi[u], phi[v])) return false;
    return true;
}

namespace {

// Backtracking over pattern vertices in degree-descending order, candidates
// ascending. Patterns here are tiny (<= 8 vertices), hosts are desk scale.
struct InducedSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;   // pattern vertices, search order
    std::vector<int> phi;     // pattern id -> host id or -1
    std::vector<bool> used;

    InducedSearch(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
        order.resize(h.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return h.degree(a) > h.degree(b); });
        phi.assign(h.n(), -1);
        used.assign(g.n(), false);
    }

    bool extend(int t) {
        if (t == h.n()) return true;
        int p = order[t];
        for (int v = 0; v < g.n(); ++v) {
            if (used[v] || g.degree(v) < h.degree(p)) continue;
            bool ok = true;
            for (int s = 0; s < t; ++s) {
                int q = order[s];
                if (h.has_edge(p, q) != g.has_edge(v, phi[q])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            phi[p] = v;
            used[v] = true;
            if (extend(t + 1)) return true;
            phi[p] = -1;
            used[v] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return std::nullopt;
    InducedSearch search(g, h);
    if (!search.extend(0)) return std::nullopt;
    return search.phi;
}

std::optional<InducedWitness> find_induced(const Graph& g, const std::vector<Graph>& family) {
    for (size_t i = 0; i < family.size(); ++i)
        if (auto phi = contains_induced(g, family[i]))
            return InducedWitness{int(i), std::move(*phi)};
    return std::nullopt;
}

bool is_free(const Graph& g, const std::vector<Graph>& family) {
    return !find_induced(g, family).has_value();
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.n());
    for (int r = 0; r < g.n(); ++r) {
        if (seen.contains(r)) continue;
        VertexSet comp(g.n());
        std::deque<int> queue{r};
        comp.add(r);
        seen.add(r);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            g.neighbors(x).for_each([&](int y) {
                if (!seen.contains(y)) {
                    seen.add(y);
                    comp.add(y);
                    queue.push_back(y);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_clique(const Graph& g, const VertexSet& s) {
    auto vs = s.to_vector();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (int v = s.first(); v != -1; v = s.next_after(v))
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

std::optional<std::array<VertexSet, 2>> is_bipartite(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    std::array<VertexSet, 2> sides{VertexSet(g.n()), VertexSet(g.n())};
    for (int r = 0; r < g.n(); ++r) {
        if (color[r] != -1) continue;
        color[r] = 0;
        sides[0].add(r);
        std::deque<int> queue{r};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y = g.neighbors(x).first(); y != -1; y = g.neighbors(x).next_after(y)) {
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    sides[color[y]].add(y);
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return sides;
}

std::optional<std::array<VertexSet, 2>> is_cobipartite(const Graph& g) {
    return is_bipartite(complement(g));
}

bool graphs_equal(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    for (int v = 0; v < a.n(); ++v)
        if (!(a.neighbors(v) == b.neighbors(v))) return false;
    return true;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return contains_induced(a, b).has_value();
}

}  // namespace updom
