#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "updom/graph.hpp"

namespace updom {

// mt19937_64 is fully specified by the standard, so every corpus below is
// reproducible across platforms from its seed.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound) without std::uniform_int_distribution
// (whose output is implementation-defined).
uint64_t rand_below(Rng& rng, uint64_t bound);
double rand_unit(Rng& rng);
bool rand_bernoulli(Rng& rng, double p);

// --- labeled enumeration -----------------------------------------------------

// Edge bit order: (0,1),(0,2),...,(0,n-1),(1,2),... ascending pairs.
Graph graph_from_edge_mask(int n, uint64_t mask);
long long labeled_graph_count(int n);  // 2^C(n,2)

// All labeled graphs on exactly n vertices, mask order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

// --- seeded random corpora -----------------------------------------------------

Graph random_graph(int n, double p, Rng& rng);
Graph random_connected_graph(int n, double p, Rng& rng);

// Rejection-sampled generic 2K2-free graphs with a split-graph fallback.
Graph random_2k2_free_graph(int n, Rng& rng);

// A split graph (clique + independent set + arbitrary cross edges); always 2K2-free.
Graph random_split_graph(int n, Rng& rng);

// Configuration-model cubic graph; n must be even and >= 4. Resamples until simple.
Graph random_cubic_graph(int n, Rng& rng);

// A graph that contains at least one cycle.
Graph random_cyclic_graph(int n, double p, Rng& rng);

}  // namespace updom
