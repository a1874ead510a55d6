#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "updom/domination.hpp"

namespace updom {

// Exhaustive and seeded-random verification drivers. Each sweep checks one
// family of claims over its corpus and reports how many instances were checked
// and which failed. Corpora are generated serially from the seed and then
// verified in parallel, so reports are byte-identical across thread counts.
struct SweepReport {
    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> notes;  // first failures, deterministic order

    bool ok() const { return failed == 0; }
};

// |upper_dominating_2k2| equals the exhaustive upper domination number on all
// 2K2-free labeled graphs with n <= max_n and on seeded random 2K2-free
// graphs with rand_lo <= n <= rand_hi; outputs are minimal dominating.
SweepReport sweep_2k2_oracle(int max_n = 6, int random_count = 200, int rand_lo = 7,
                             int rand_hi = 12, uint64_t seed = 1,
                             int cap = default_brute_cap());

// The upper domination number of Q(G) equals n - gamma(G) on all connected
// graphs with n_lo <= n <= n_hi whose n - gamma(G) >= 3, with verified lifts.
SweepReport sweep_q_identity(int n_lo = 4, int n_hi = 6, int cap = default_brute_cap());

// The upper domination number of the edge gadget equals alpha(G) + 2m on all
// labeled graphs with n <= max_n and m <= max_m, with verified lifts.
SweepReport sweep_gadget_identity(int max_n = 5, int max_m = 4,
                                  int cap = default_brute_cap());

// Partition-based and forbidden-subgraph-based membership in the hereditary
// closure of the Q-graphs agree on all labeled graphs with n <= max_n and on
// seeded random graphs with rand_lo <= n <= rand_hi.
SweepReport sweep_qstar_agreement(int max_n = 6, int random_count = 1000, int rand_lo = 7,
                                  int rand_hi = 9, uint64_t seed = 1);

// Self-tests of the eleven forbidden graphs: co-bipartite where stated, no
// nice partitions, the six-vertex member embeds into the complement of C9,
// and every single-vertex deletion admits a nice partition (minimality).
SweepReport sweep_forbidden_set_self_tests();

// Every minimal dominating set larger than the independence number is a
// triangle plus its anti-neighbourhood, on all 2K2-free graphs with n <= max_n.
SweepReport sweep_triangle_corollary(int max_n = 6, int cap = default_brute_cap());

// Normalization postconditions on seeded random connected graphs with
// greedy-minimalized dominating sets.
SweepReport sweep_normalization(int count = 500, int max_n = 14, uint64_t seed = 1);

// Subdivision doubles the girth on seeded cyclic graphs; gadgets of seeded
// cubic graphs have maximum degree <= 6 and girth >= 6.
SweepReport sweep_structural(int girth_count = 100, int cubic_count = 50, uint64_t seed = 1);

// Decision-tree and headline classification agree on all labeled graphs with
// n <= max_n, verdict witnesses verify, and the fixed table of named graphs
// is reproduced.
SweepReport sweep_dichotomy(int max_n = 5);

}  // namespace updom
