#pragma once

#include "updom/graph.hpp"

namespace updom {

// Small named graphs used throughout the tests and the recognizers.

Graph empty_graph(int n);
Graph path(int n);      // P_n
Graph cycle(int n);     // C_n, n >= 3
Graph complete(int n);  // K_n
Graph complete_bipartite(int a, int b);
Graph star(int leaves);  // K_{1,leaves}, center 0

Graph claw();      // K_{1,3}
Graph paw();       // triangle plus a pendant
Graph diamond();   // K_4 minus an edge
Graph two_k2();    // 2K_2
Graph p4();        // P_4
Graph prism();     // two triangles {0,1,2}, {3,4,5} joined by a perfect matching

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace updom
