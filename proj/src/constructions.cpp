#include "updom/constructions.hpp"

#include <algorithm>
#include <map>

namespace updom {

// --- subdivision and Q-graphs -----------------------------------------------

Subdivision subdivide(const Graph& g) {
    Subdivision s;
    s.base = g;
    s.base_n = g.n();
    s.base_m = g.m();
    s.edge_of_new = g.edge_list();
    Graph out(s.base_n + s.base_m);
    for (int k = 0; k < s.base_m; ++k) {
        auto [u, v] = s.edge_of_new[k];
        out.add_edge(u, s.base_n + k);
        out.add_edge(v, s.base_n + k);
    }
    s.graph = std::move(out);
    return s;
}

VertexSet QGraph::old_vertices() const {
    VertexSet s(graph.n());
    for (int v = 0; v < base_n; ++v) s.add(v);
    return s;
}

VertexSet QGraph::new_vertices() const {
    VertexSet s(graph.n());
    for (int k = 0; k < base_m; ++k) s.add(base_n + k);
    return s;
}

int QGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edge_of_new.begin(), edge_of_new.end(), Edge{u, v});
    if (it == edge_of_new.end() || *it != Edge{u, v}) return -1;
    return int(it - edge_of_new.begin());
}

QGraph q_construct(const Graph& g) {
    Subdivision s = subdivide(g);
    QGraph q;
    q.base = g;
    q.base_n = s.base_n;
    q.base_m = s.base_m;
    q.edge_of_new = s.edge_of_new;
    Graph out = s.graph;
    for (int u = 0; u < q.base_n; ++u)
        for (int v = u + 1; v < q.base_n; ++v) out.add_edge(u, v);
    for (int a = 0; a < q.base_m; ++a)
        for (int b = a + 1; b < q.base_m; ++b) out.add_edge(q.base_n + a, q.base_n + b);
    q.graph = std::move(out);
    return q;
}

VertexSet q_forward(const QGraph& qg, const VertexSet& d) {
    const Graph& base = qg.base;
    if (d.universe() != base.n())
        throw PreconditionError("q_forward: set is not over the base graph");
    if (!is_minimal_dominating(base, d))
        throw PreconditionError("q_forward: input is not a minimal dominating set of the base");
    for (int x = d.first(); x != -1; x = d.next_after(x))
        if (private_neighbours(base, d, x).empty())
            throw PreconditionError(
                "q_forward: vertex " + std::to_string(x) +
                " has no private neighbour; normalize the set first");

    VertexSet lift(qg.graph.n());
    for (int u = 0; u < base.n(); ++u) {
        if (d.contains(u)) continue;
        int w = (base.neighbors(u) & d).first();  // lowest-id dominator
        if (w == -1) throw InvariantError("q_forward: undominated vertex outside the set");
        int k = qg.edge_index(u, w);
        if (k == -1) throw InvariantError("q_forward: dominator edge missing from the base");
        lift.add(qg.new_vertex(k));
    }
    if (lift.size() != base.n() - d.size())
        throw InvariantError("q_forward: lift has the wrong size");
    if (!is_minimal_dominating(qg.graph, lift))
        throw InvariantError("q_forward: lift is not a minimal dominating set of Q(G)");
    return lift;
}

VertexSet q_backward(const QGraph& qg, const VertexSet& d) {
    if (d.universe() != qg.graph.n())
        throw PreconditionError("q_backward: set is not over the Q-graph");
    if (!is_minimal_dominating(qg.graph, d))
        throw PreconditionError("q_backward: input is not a minimal dominating set of Q(G)");
    if (d.size() < 3)
        throw PreconditionError("q_backward: requires |d| >= 3 (the identity is guarded by "
                                "Gamma(Q(G)) >= 3)");

    const VertexSet old = qg.old_vertices();
    const VertexSet fresh = qg.new_vertices();
    const bool in_old = d.intersects(old);
    const bool in_new = d.intersects(fresh);
    if (in_old && in_new)
        throw InvariantError("q_backward: a minimal dominating set of size >= 3 cannot meet "
                             "both cliques");

    const Graph& base = qg.base;
    VertexSet result(base.n());

    if (in_old) {
        for (int v = 0; v < base.n(); ++v)
            if (!d.contains(v)) result.add(v);
        if (!is_maximal_independent(base, result))
            throw InvariantError("q_backward: complement of an old-side solution must be a "
                                 "maximal independent set of the base");
    } else {
        // the selected base edges form a spanning star forest; its centers dominate
        Graph forest(base.n());
        for (int x = d.first(); x != -1; x = d.next_after(x)) {
            auto [u, v] = qg.edge_of_new[x - qg.base_n];
            forest.add_edge(u, v);
        }
        for (int v = 0; v < base.n(); ++v)
            if (forest.degree(v) == 0)
                throw InvariantError("q_backward: selected edges do not span the base");
        for (const VertexSet& comp : connected_components(forest)) {
            int edges = 0, center = -1, high_degree = 0;
            for (int v = comp.first(); v != -1; v = comp.next_after(v)) {
                edges += forest.degree(v);
                if (forest.degree(v) >= 2) {
                    ++high_degree;
                    center = v;
                }
            }
            edges /= 2;
            if (edges != comp.size() - 1 || high_degree > 1)
                throw InvariantError("q_backward: selected edges are not a star forest");
            if (center == -1) center = comp.first();  // a lone edge: lower endpoint
            result.add(center);
        }
    }

    if (result.size() != base.n() - d.size())
        throw InvariantError("q_backward: lift has the wrong size");
    if (!is_dominating(base, result))
        throw InvariantError("q_backward: lift is not dominating in the base");
    return result;
}

// --- the edge gadget ----------------------------------------------------------

GadgetGraph gadget_construct(const Graph& g) {
    GadgetGraph gg;
    gg.base = g;
    gg.base_n = g.n();
    gg.base_m = g.m();
    Graph out(gg.base_n + 4 * gg.base_m);
    int next = gg.base_n;
    for (auto [u, v] : g.edge_list()) {
        GadgetGraph::EdgeGadget e{u, v, next, next + 1, next + 2, next + 3};
        next += 4;
        out.add_edge(u, e.ve);
        out.add_edge(e.ve, e.ue);
        out.add_edge(e.ue, v);
        out.add_edge(u, e.vpe);
        out.add_edge(e.vpe, e.upe);
        out.add_edge(e.upe, v);
        gg.gadgets.push_back(e);
    }
    gg.graph = std::move(out);
    return gg;
}

VertexSet gadget_forward(const GadgetGraph& gg, const VertexSet& s) {
    const Graph& base = gg.base;
    if (s.universe() != base.n())
        throw PreconditionError("gadget_forward: set is not over the base graph");
    if (!is_maximal_independent(base, s))
        throw PreconditionError("gadget_forward: input is not a maximal independent set of "
                                "the base");

    VertexSet lift(gg.graph.n());
    for (int v = s.first(); v != -1; v = s.next_after(v)) lift.add(v);
    for (const auto& e : gg.gadgets) {
        if (s.contains(e.v)) {
            lift.add(e.ve);  // the pair not adjacent to the chosen endpoint
            lift.add(e.vpe);
        } else if (s.contains(e.u)) {
            lift.add(e.ue);
            lift.add(e.upe);
        } else {
            lift.add(e.ve);  // free choice; take the pair adjacent to the lower endpoint
            lift.add(e.vpe);
        }
    }
    if (lift.size() != s.size() + 2 * gg.base_m)
        throw InvariantError("gadget_forward: lift has the wrong size");
    if (!is_maximal_independent(gg.graph, lift) || !is_minimal_dominating(gg.graph, lift))
        throw InvariantError("gadget_forward: lift is not a minimal dominating set");
    return lift;
}

namespace {

bool gadget_edge_clean(const GadgetGraph::EdgeGadget& e, const VertexSet& d) {
    return !d.contains(e.ve) && !d.contains(e.ue) && !d.contains(e.vpe) && !d.contains(e.upe);
}

}  // namespace

GadgetBackward gadget_backward(const GadgetGraph& gg, const VertexSet& d) {
    if (d.universe() != gg.graph.n())
        throw PreconditionError("gadget_backward: set is not over the gadget graph");
    if (!is_minimal_dominating(gg.graph, d))
        throw PreconditionError("gadget_backward: input is not a minimal dominating set");

    VertexSet current = d;
    for (int round = 0; round <= gg.base_n; ++round) {
        // lowest base vertex still incident to a clean edge
        int u = -1;
        for (const auto& e : gg.gadgets) {
            if (!gadget_edge_clean(e, current)) continue;
            int lo = std::min(e.u, e.v);
            if (u == -1 || lo < u) u = lo;
        }
        if (u == -1) break;
        if (round == gg.base_n)
            throw InvariantError("gadget_backward: clean-edge repair did not converge");
        if (!current.contains(u))
            throw InvariantError("gadget_backward: clean edge with an endpoint outside the set");
        current.remove(u);
        std::vector<int> partners;
        for (const auto& e : gg.gadgets) {
            if (!gadget_edge_clean(e, current)) continue;
            if (e.u == u) {
                current.add(e.ve);  // the path vertices adjacent to u
                current.add(e.vpe);
                partners.push_back(e.v);
            } else if (e.v == u) {
                current.add(e.ue);
                current.add(e.upe);
                partners.push_back(e.u);
            }
        }
        std::sort(partners.begin(), partners.end());
        for (int w : partners) {
            if (!current.contains(w)) continue;
            VertexSet without = current;
            without.remove(w);
            if (is_dominating(gg.graph, without)) current = without;
        }
    }

    GadgetBackward out{VertexSet(gg.base.n()), current};
    for (int v = 0; v < gg.base_n; ++v)
        if (current.contains(v)) out.base_independent.add(v);

    if (!is_minimal_dominating(gg.graph, current) || current.size() < d.size())
        throw InvariantError("gadget_backward: repaired set is not minimal dominating of "
                             "at least the input size");
    for (const auto& e : gg.gadgets)
        if (gadget_edge_clean(e, current))
            throw InvariantError("gadget_backward: clean edge survived the repair");
    if (!is_independent_set(gg.base, out.base_independent))
        throw InvariantError("gadget_backward: base part of the repaired set is not independent");
    if (out.base_independent.size() < d.size() - 2 * gg.base_m)
        throw InvariantError("gadget_backward: base part is too small");
    return out;
}

// --- identity certificates -----------------------------------------------------

QCertificate certify_q_identity(const Graph& g, int cap) {
    QCertificate cert;
    cert.base_n = g.n();
    cert.base_m = g.m();

    auto gamma = brute_gamma(g, cap);
    cert.gamma = gamma.value;
    Normalized norm = normalize_minimal_dominating(g, gamma.witness);
    cert.gamma_witness = norm.set;
    cert.gamma = norm.set.size() < cert.gamma ? norm.set.size() : cert.gamma;

    QGraph q = q_construct(g);
    auto gamma_q = brute_Gamma(q.graph, cap);
    cert.gamma_q = gamma_q.value;
    cert.gamma_q_witness = gamma_q.witness;
    cert.precondition_met = cert.gamma_q >= 3;
    cert.identity_holds = cert.gamma_q == cert.base_n - cert.gamma;

    VertexSet fwd = q_forward(q, cert.gamma_witness);
    cert.forward.size = fwd.size();
    cert.forward.verified =
        fwd.size() == cert.base_n - cert.gamma && is_minimal_dominating(q.graph, fwd);

    if (cert.precondition_met) {
        VertexSet bwd = q_backward(q, cert.gamma_q_witness);
        cert.backward.size = bwd.size();
        cert.backward.verified =
            bwd.size() == cert.base_n - cert.gamma_q && is_dominating(g, bwd);
        cert.backward_ran = true;
    }
    return cert;
}

GadgetCertificate certify_gadget_identity(const Graph& g, int cap) {
    GadgetCertificate cert;
    cert.base_n = g.n();
    cert.base_m = g.m();

    auto alpha = brute_alpha(g, cap);
    cert.alpha = alpha.value;
    cert.alpha_witness = alpha.witness;

    GadgetGraph gg = gadget_construct(g);
    auto big = brute_Gamma(gg.graph, cap);
    cert.gamma_gadget = big.value;
    cert.gadget_witness = big.witness;
    cert.identity_holds = cert.gamma_gadget == cert.alpha + 2 * cert.base_m;

    VertexSet fwd = gadget_forward(gg, cert.alpha_witness);
    cert.forward.size = fwd.size();
    cert.forward.verified = fwd.size() == cert.alpha + 2 * cert.base_m &&
                            is_minimal_dominating(gg.graph, fwd);

    GadgetBackward bwd = gadget_backward(gg, cert.gadget_witness);
    cert.backward.size = bwd.base_independent.size();
    cert.backward.verified = is_independent_set(g, bwd.base_independent) &&
                             bwd.base_independent.size() >= cert.gamma_gadget - 2 * cert.base_m;
    return cert;
}

// --- boundary families -----------------------------------------------------------

Graph tripod(int i, int j, int l) {
    if (i < 0 || j < 0 || l < 0) throw PreconditionError("tripod: negative arm length");
    Graph g(1 + i + j + l);
    int next = 1;
    for (int arm : {i, j, l}) {
        int prev = 0;
        for (int k = 0; k < arm; ++k) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Graph h_graph(int n, HConvention convention) {
    if (convention == HConvention::path_edges) {
        if (n < 1) throw PreconditionError("h_graph: path-edges convention needs n >= 1");
        return h_graph(n - 1, HConvention::internal_vertices);
    }
    if (n < 0) throw PreconditionError("h_graph: negative path length");
    // 0 = left hub, 1..n internal, n+1 = right hub, then two leaves per hub
    Graph g(n + 6);
    for (int v = 0; v <= n; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, n + 2);
    g.add_edge(0, n + 3);
    g.add_edge(n + 1, n + 4);
    g.add_edge(n + 1, n + 5);
    return g;
}

// --- membership completion --------------------------------------------------------

QCompletion complete_to_q(const Graph& g, const NicePartition& p) {
    if (!is_nice_partition(g, p))
        throw PreconditionError("complete_to_q: partition is not nice");

    std::vector<int> base_id(g.n(), -1);
    int next = 0;
    for (int u = p.u.first(); u != -1; u = p.u.next_after(u)) base_id[u] = next++;
    const int real_u = next;

    // every W-vertex contributes one base edge; missing U-neighbours become
    // fresh base vertices, one per deficit, so the pairs stay distinct
    std::vector<Edge> base_edges;
    std::vector<int> w_order;
    for (int w = p.w.first(); w != -1; w = p.w.next_after(w)) {
        std::vector<int> ends;
        VertexSet nu = g.neighbors(w) & p.u;
        for (int u = nu.first(); u != -1; u = nu.next_after(u)) ends.push_back(base_id[u]);
        while (ends.size() < 2) ends.push_back(next++);
        if (ends[0] > ends[1]) std::swap(ends[0], ends[1]);
        base_edges.push_back({ends[0], ends[1]});
        w_order.push_back(w);
    }

    QCompletion out;
    out.added_vertices = next - real_u;
    out.q = q_construct(make_graph(next, base_edges));

    out.embedding.assign(g.n(), -1);
    for (int u = p.u.first(); u != -1; u = p.u.next_after(u)) out.embedding[u] = base_id[u];
    for (size_t i = 0; i < w_order.size(); ++i) {
        int k = out.q.edge_index(base_edges[i].first, base_edges[i].second);
        if (k == -1) throw InvariantError("complete_to_q: lost a base edge");
        out.embedding[w_order[i]] = out.q.new_vertex(k);
    }
    if (!check_embedding(out.q.graph, g, out.embedding))
        throw InvariantError("complete_to_q: embedding is not induced");
    return out;
}

}  // namespace updom
