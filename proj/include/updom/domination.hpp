#pragma once

#include <functional>

#include "updom/graph.hpp"

namespace updom {

// --- predicates -------------------------------------------------------------

// Every vertex outside d has a neighbour in d.
bool is_dominating(const Graph& g, const VertexSet& d);

// d is dominating and no proper subset of d is dominating.
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

// All y outside d whose only neighbour in d is x. Requires x in d.
VertexSet private_neighbours(const Graph& g, const VertexSet& d, int x);

bool is_maximal_independent(const Graph& g, const VertexSet& s);

// Removes redundant vertices (lowest id first) until the set is a minimal
// dominating set. Requires d dominating.
VertexSet greedy_minimalize(const Graph& g, VertexSet d);

// --- normalization ----------------------------------------------------------

struct Normalized {
    VertexSet set;
    // Vertices of isolated (single-vertex) components: they stay in the set
    // although they cannot have a private neighbour outside it.
    VertexSet kept_isolated;
};

// Turns a minimal dominating set into one of at most the same size in which
// every vertex of a component with >= 2 vertices has a private neighbour
// outside the set. Runs independently per connected component; tie-breaking
// is lowest-id first throughout.
Normalized normalize_minimal_dominating(const Graph& g, const VertexSet& d);

// --- exhaustive oracles -----------------------------------------------------

// Default cap for subset-search oracles; UPDOM_MAX_N overrides it.
int default_brute_cap();

struct OracleResult {
    int value = 0;
    VertexSet witness;
};

// Exact invariants by exhaustive search. Instances over the cap are refused.
OracleResult brute_alpha(const Graph& g, int cap = default_brute_cap());
OracleResult brute_gamma(const Graph& g, int cap = default_brute_cap());
OracleResult brute_Gamma(const Graph& g, int cap = default_brute_cap());

// Same value as brute_Gamma, search split across OpenMP threads; the returned
// witness is identical to the serial one (deterministic reduction).
OracleResult brute_Gamma_parallel(const Graph& g, int cap = default_brute_cap());

// Streams every minimal dominating set exactly once (DFS order).
void enumerate_minimal_dominating(const Graph& g,
                                  const std::function<void(const VertexSet&)>& visit,
                                  int cap = default_brute_cap());
long long count_minimal_dominating(const Graph& g, int cap = default_brute_cap());

// Streams every maximal independent set exactly once (pivoting clique
// enumeration on the complement; output-polynomial, no cap).
void enumerate_maximal_independent(const Graph& g,
                                   const std::function<void(const VertexSet&)>& visit);

struct InvariantReport {
    int alpha = 0;
    int gamma_lower = 0;  // domination number
    int gamma_upper = 0;  // upper domination number
    VertexSet alpha_witness, gamma_witness, Gamma_witness;
};

InvariantReport invariants(const Graph& g, int cap = default_brute_cap());

// --- serial reference implementations ---------------------------------------
//
// Plain 2^n subset filters over the public predicates. Kept as the oracle the
// optimized kernels are tested against, and as the baseline in the benchmark.
namespace ref {
OracleResult brute_alpha(const Graph& g, int cap = default_brute_cap());
OracleResult brute_gamma(const Graph& g, int cap = default_brute_cap());
OracleResult brute_Gamma(const Graph& g, int cap = default_brute_cap());
}  // namespace ref

}  // namespace updom
