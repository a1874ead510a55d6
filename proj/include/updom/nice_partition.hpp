#pragma once

#include "updom/graph.hpp"

namespace updom {

// Partition of V into two cliques (U, W) such that
//  (a) every vertex of W has at most two neighbours in U, and
//  (b) W-vertices with exactly two U-neighbours have pairwise distinct
//      U-neighbourhoods.
// Graphs admitting such a partition are exactly the hereditary closure of the
// Q-graphs.
struct NicePartition {
    VertexSet u;
    VertexSet w;
};

bool is_nice_partition(const Graph& g, const NicePartition& p);

}  // namespace updom
