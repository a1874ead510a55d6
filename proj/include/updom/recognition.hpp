#pragma once

#include <array>
#include <optional>
#include <string>

#include "updom/constructions.hpp"
#include "updom/graph.hpp"
#include "updom/nice_partition.hpp"

namespace updom {

// The eleven minimal forbidden induced subgraphs of the hereditary closure of
// the Q-graphs: the complements of C3, C5, C7 and the eight small co-bipartite
// graphs without a nice partition.
struct NamedGraph {
    std::string name;
    Graph graph;
};
const std::vector<NamedGraph>& forbidden_set_n();
const std::vector<Graph>& forbidden_set_n_graphs();

// First nice partition in a fixed deterministic order: the complement's
// bipartition is unique per component up to swapping sides, so all clique
// bipartitions are enumerated as 2^c side choices, each tried in both (U, W)
// orientations. Inputs needing more than `coloring_cap` colorings are refused.
std::optional<NicePartition> find_nice_partition(const Graph& g,
                                                 long long coloring_cap = 1LL << 20);

enum class QStarMethod { partition, forbidden };
bool in_q_star(const Graph& g, QStarMethod method);

// --- tripod forests ----------------------------------------------------------

struct TripodComponent {
    VertexSet vertices;
    bool tripod = false;
    std::array<int, 3> arms{0, 0, 0};  // descending; paths are degenerate tripods
};
struct ClassSResult {
    bool member = false;
    std::vector<TripodComponent> components;
};
// Forests whose components are spiders with at most three legs.
ClassSResult in_class_S(const Graph& g);

// --- the Z_k hierarchy ---------------------------------------------------------

struct ZkResult {
    bool member = true;
    std::string reason;        // empty when member
    std::vector<int> witness;  // offending cycle or embedding, if any
};
// Graphs of maximum degree 3 with girth above k avoiding H_1..H_k. Requires k >= 3.
ZkResult in_Z_k(const Graph& g, int k,
                HConvention convention = HConvention::internal_vertices);

// --- exact Q-graph extraction ----------------------------------------------------

struct BaseExtraction {
    Graph base;
    std::vector<int> base_id_of;  // g-vertex -> base id, -1 for W-vertices
};
// Inverts the Q construction: requires every W-vertex to have exactly two
// U-neighbours (otherwise the graph is only in the hereditary closure; use
// complete_to_q first).
BaseExtraction extract_base(const Graph& g, const NicePartition& p);

}  // namespace updom
