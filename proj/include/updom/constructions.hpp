#pragma once

#include <utility>
#include <vector>

#include "updom/domination.hpp"
#include "updom/graph.hpp"
#include "updom/nice_partition.hpp"

namespace updom {

// --- subdivision and Q-graphs -----------------------------------------------

// S(G): every base edge subdivided once. Old vertices keep their ids; the
// subdivision vertex of the k-th base edge (edges sorted ascending) gets id
// base_n + k.
struct Subdivision {
    Graph graph;
    Graph base;
    int base_n = 0;
    int base_m = 0;
    std::vector<Edge> edge_of_new;  // index k -> the base edge split by vertex base_n + k

    int new_vertex(int edge_index) const { return base_n + edge_index; }
};
Subdivision subdivide(const Graph& g);

// Q(G): S(G) with cliques placed on the old and on the new vertices.
struct QGraph {
    Graph graph;
    Graph base;
    int base_n = 0;
    int base_m = 0;
    std::vector<Edge> edge_of_new;

    int new_vertex(int edge_index) const { return base_n + edge_index; }
    VertexSet old_vertices() const;
    VertexSet new_vertices() const;
    // index of the base edge {u, v}, or -1
    int edge_index(int u, int v) const;
};
QGraph q_construct(const Graph& g);

// Minimal dominating set of Q(G) of size base_n - |d|, built by picking for
// each vertex outside d the edge to its lowest-id dominator. Requires d to be
// a minimal dominating set of the base in which every positive-degree vertex
// has a private neighbour (normalize first).
VertexSet q_forward(const QGraph& qg, const VertexSet& d);

// Dominating set of the base of size base_n - |d| from a minimal dominating
// set d of Q(G) with |d| >= 3: the complement of d when d lies in the old
// clique, the star centers of the selected edges when d lies in the new one.
VertexSet q_backward(const QGraph& qg, const VertexSet& d);

// --- the edge gadget --------------------------------------------------------

// G': every base edge uv replaced by two induced paths u-ve-ue-v and
// u-ve'-ue'-v (the base edge itself is removed). Old ids are kept; the k-th
// edge's path vertices are base_n + 4k .. base_n + 4k + 3.
struct GadgetGraph {
    struct EdgeGadget {
        int u, v;          // base endpoints, u < v
        int ve, ue;        // first path u-ve-ue-v
        int vpe, upe;      // second path u-ve'-ue'-v
    };
    Graph graph;
    Graph base;
    int base_n = 0;
    int base_m = 0;
    std::vector<EdgeGadget> gadgets;
};
GadgetGraph gadget_construct(const Graph& g);

// Minimal dominating set of the gadget graph of size |s| + 2*base_m from a
// maximal independent set s of the base.
VertexSet gadget_forward(const GadgetGraph& gg, const VertexSet& s);

struct GadgetBackward {
    VertexSet base_independent;  // independent in the base, size >= |d| - 2m
    VertexSet transformed;       // the repaired dominating set of the gadget, no clean edges
};
// Repairs d-clean edges (gadget quadruples disjoint from d) as in the
// hardness proof, then intersects with the base vertices.
GadgetBackward gadget_backward(const GadgetGraph& gg, const VertexSet& d);

// --- identity certificates ---------------------------------------------------

struct LiftCheck {
    int size = 0;
    bool verified = false;
};

struct QCertificate {
    int base_n = 0, base_m = 0;
    int gamma = 0;  // domination number of the base
    VertexSet gamma_witness;
    int gamma_q = 0;  // upper domination number of Q(G)
    VertexSet gamma_q_witness;
    bool precondition_met = false;  // the identity is only claimed when Gamma(Q(G)) >= 3
    bool identity_holds = false;
    LiftCheck forward;   // minimal dominating in Q(G) of size base_n - gamma
    LiftCheck backward;  // dominating in the base of size base_n - gamma_q
    bool backward_ran = false;
};
QCertificate certify_q_identity(const Graph& g, int cap = default_brute_cap());

struct GadgetCertificate {
    int base_n = 0, base_m = 0;
    int alpha = 0;
    VertexSet alpha_witness;
    int gamma_gadget = 0;  // upper domination number of the gadget graph
    VertexSet gadget_witness;
    bool identity_holds = false;  // gamma_gadget == alpha + 2 * base_m
    LiftCheck forward;            // minimal dominating in the gadget of size alpha + 2m
    LiftCheck backward;           // independent in the base of size >= gamma_gadget - 2m
};
GadgetCertificate certify_gadget_identity(const Graph& g, int cap = default_brute_cap());

// --- boundary families --------------------------------------------------------

// Spider with one center (id 0) and three pendant paths of the given lengths.
Graph tripod(int i, int j, int l);

// Convention for reading the family H_n: n counts either the internal path
// vertices strictly between the two degree-3 hubs, or the edges of the
// hub-to-hub path.
enum class HConvention { internal_vertices, path_edges };

// Two hubs carrying two pendant leaves each, joined by a path. Under the
// internal-vertices convention h_graph(n) has n + 6 vertices; h_graph(1) has
// its hubs at distance 2.
Graph h_graph(int n, HConvention convention = HConvention::internal_vertices);

// --- membership completion ----------------------------------------------------

struct QCompletion {
    QGraph q;
    std::vector<int> embedding;  // vertex of g -> vertex of q.graph
    int added_vertices = 0;
};
// Realizes membership in the hereditary closure of the Q-graphs: appends fresh
// old-clique vertices until every W-vertex has exactly two U-neighbours, then
// rebuilds the canonical Q-graph of the extracted base. The input graph embeds
// into the result via the returned map.
QCompletion complete_to_q(const Graph& g, const NicePartition& p);

}  // namespace updom
