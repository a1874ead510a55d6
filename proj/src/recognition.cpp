#include "updom/recognition.hpp"

#include <algorithm>

#include "updom/families.hpp"

namespace updom {

bool is_nice_partition(const Graph& g, const NicePartition& p) {
    if (p.u.universe() != g.n() || p.w.universe() != g.n()) return false;
    if (p.u.intersects(p.w)) return false;
    if ((p.u | p.w) != VertexSet::full(g.n())) return false;
    if (!is_clique(g, p.u) || !is_clique(g, p.w)) return false;
    std::vector<std::pair<int, int>> pairs;
    for (int w = p.w.first(); w != -1; w = p.w.next_after(w)) {
        VertexSet nu = g.neighbors(w) & p.u;
        int deg = nu.size();
        if (deg > 2) return false;  // condition (a)
        if (deg == 2) {
            int a = nu.first();
            pairs.emplace_back(a, nu.next_after(a));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    // condition (b): the two-neighbour pairs are pairwise distinct
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

// Vertex layout for G1..G3: corners a=0 (bottom left), b=1 (bottom right),
// c=2 (top right), d=3 (top left); e=4 and f=5 sit inside, adjacent to all
// four corners and to each other.
//   G1: corner edges ab, cd, da      G2: ab, bc, cd, da      G3: ab, cd
// G4: corners form a K4; e=4 hangs on the right (b, c), f=5 on the left (a, d).
// G5..G8: corners a=0, b=1, c=2, d=3, top e=4, bottom f=5, left g=6, right
// h=7; g and h are adjacent to everything except each other; inner edges
//   G5: ab, cd, ce, de, af, bf       G6: G5 + da
//   G7: G6 + bc                      G8: G7 + ef
const std::vector<NamedGraph>& forbidden_set_n() {
    static const std::vector<NamedGraph> graphs = [] {
        std::vector<NamedGraph> out;
        out.push_back({"co-C3", complement(cycle(3))});
        out.push_back({"co-C5", complement(cycle(5))});
        out.push_back({"co-C7", complement(cycle(7))});

        const std::vector<Edge> inner_g123 = {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 4},
                                              {2, 5}, {3, 4}, {3, 5}, {4, 5}};
        auto with = [](std::vector<Edge> edges, const std::vector<Edge>& more) {
            edges.insert(edges.end(), more.begin(), more.end());
            return edges;
        };
        out.push_back({"G1", make_graph(6, with(inner_g123, {{0, 1}, {2, 3}, {0, 3}}))});
        out.push_back({"G2", make_graph(6, with(inner_g123, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}))});
        out.push_back({"G3", make_graph(6, with(inner_g123, {{0, 1}, {2, 3}}))});
        out.push_back({"G4", make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3},
                                            {1, 4}, {2, 4}, {0, 5}, {3, 5}})});

        std::vector<Edge> g5;
        for (int hub : {6, 7})
            for (int v = 0; v < 6; ++v) g5.push_back({std::min(hub, v), std::max(hub, v)});
        g5 = with(g5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}, {0, 5}, {1, 5}});
        out.push_back({"G5", make_graph(8, g5)});
        out.push_back({"G6", make_graph(8, with(g5, {{0, 3}}))});
        out.push_back({"G7", make_graph(8, with(g5, {{0, 3}, {1, 2}}))});
        out.push_back({"G8", make_graph(8, with(g5, {{0, 3}, {1, 2}, {4, 5}}))});
        return out;
    }();
    return graphs;
}

const std::vector<Graph>& forbidden_set_n_graphs() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> out;
        for (const auto& ng : forbidden_set_n()) out.push_back(ng.graph);
        return out;
    }();
    return graphs;
}

std::optional<NicePartition> find_nice_partition(const Graph& g, long long coloring_cap) {
    Graph co = complement(g);
    auto sides = is_bipartite(co);
    if (!sides) return std::nullopt;

    std::vector<VertexSet> comps = connected_components(co);
    const int c = int(comps.size());
    const unsigned long long colorings =
        c >= 63 ? ~0ull : (1ull << c);  // the cap fires long before an overflow could

    for (unsigned long long mask = 0; mask < colorings; ++mask) {
        if ((long long)mask >= coloring_cap)
            throw PreconditionError("find_nice_partition: no nice partition within the cap of " +
                                    std::to_string(coloring_cap) + " clique bipartitions");
        VertexSet a(g.n());
        for (int i = 0; i < c; ++i) {
            VertexSet cls0 = comps[i] & (*sides)[0];
            bool flip = i < 63 && ((mask >> i) & 1);
            a |= flip ? comps[i] - cls0 : cls0;
        }
        VertexSet b = VertexSet::full(g.n()) - a;
        for (NicePartition p : {NicePartition{b, a}, NicePartition{a, b}})
            if (is_nice_partition(g, p)) return p;
    }
    return std::nullopt;
}

bool in_q_star(const Graph& g, QStarMethod method) {
    if (method == QStarMethod::partition) return find_nice_partition(g).has_value();
    return is_free(g, forbidden_set_n_graphs());
}

ClassSResult in_class_S(const Graph& g) {
    ClassSResult result;
    result.member = true;
    for (const VertexSet& comp : connected_components(g)) {
        TripodComponent tc;
        tc.vertices = comp;
        InducedSubgraph sub = induced_subgraph(g, comp);
        const Graph& t = sub.graph;
        const int n = t.n();

        int deg3 = 0, center = -1;
        bool ok = t.m() == n - 1;  // connected, so this means acyclic
        for (int v = 0; v < n && ok; ++v) {
            if (t.degree(v) > 3) ok = false;
            if (t.degree(v) == 3) {
                ++deg3;
                center = v;
            }
        }
        ok = ok && deg3 <= 1;
        tc.tripod = ok;
        if (ok) {
            auto walk = [&](int from, int prev) {
                int len = 0;
                while (from != -1) {
                    ++len;
                    int next = -1;
                    for (int x = t.neighbors(from).first(); x != -1;
                         x = t.neighbors(from).next_after(x))
                        if (x != prev) next = x;
                    prev = from;
                    from = next;
                }
                return len;
            };
            if (center != -1) {
                int i = 0;
                for (int x = t.neighbors(center).first(); x != -1;
                     x = t.neighbors(center).next_after(x))
                    tc.arms[i++] = walk(x, center);
            } else if (n > 1) {
                // a path is a degenerate tripod; split it at a middle vertex
                int k = n - 1;  // edges
                tc.arms = {(k + 1) / 2, k / 2, 0};
            }
            std::sort(tc.arms.rbegin(), tc.arms.rend());
        } else {
            result.member = false;
        }
        result.components.push_back(std::move(tc));
    }
    return result;
}

ZkResult in_Z_k(const Graph& g, int k, HConvention convention) {
    if (k < 3) throw PreconditionError("in_Z_k: defined for k >= 3");
    ZkResult r;
    if (max_degree(g) > 3) {
        r.member = false;
        r.reason = "maximum degree exceeds 3";
        return r;
    }
    if (auto cyc = girth_cycle(g); cyc && int(cyc->size()) <= k) {
        r.member = false;
        r.reason = "contains C" + std::to_string(cyc->size());
        r.witness = *cyc;
        return r;
    }
    for (int i = 1; i <= k; ++i) {
        if (auto phi = contains_induced(g, h_graph(i, convention))) {
            r.member = false;
            r.reason = "contains H" + std::to_string(i);
            r.witness = *phi;
            return r;
        }
    }
    return r;
}

BaseExtraction extract_base(const Graph& g, const NicePartition& p) {
    if (!is_nice_partition(g, p))
        throw PreconditionError("extract_base: partition is not nice");

    BaseExtraction out;
    out.base_id_of.assign(g.n(), -1);
    int next = 0;
    for (int u = p.u.first(); u != -1; u = p.u.next_after(u)) out.base_id_of[u] = next++;

    std::vector<Edge> edges;
    std::vector<int> w_order;
    for (int w = p.w.first(); w != -1; w = p.w.next_after(w)) {
        VertexSet nu = g.neighbors(w) & p.u;
        if (nu.size() != 2)
            throw PreconditionError("extract_base: a W-vertex has " +
                                    std::to_string(nu.size()) +
                                    " U-neighbours; not an exact Q-graph (complete_to_q "
                                    "can repair this)");
        int a = nu.first();
        int b = nu.next_after(a);
        edges.push_back({std::min(out.base_id_of[a], out.base_id_of[b]),
                         std::max(out.base_id_of[a], out.base_id_of[b])});
        w_order.push_back(w);
    }
    out.base = make_graph(next, edges);

    // Q(base) must reproduce g under the natural vertex correspondence
    QGraph q = q_construct(out.base);
    std::vector<int> phi(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (out.base_id_of[v] != -1) phi[v] = out.base_id_of[v];
    for (size_t i = 0; i < w_order.size(); ++i)
        phi[w_order[i]] = q.new_vertex(q.edge_index(edges[i].first, edges[i].second));
    if (q.graph.n() != g.n() || !check_embedding(q.graph, g, phi))
        throw InvariantError("extract_base: Q of the extracted base does not match the input");
    return out;
}

}  // namespace updom
