#pragma once

#include <string>
#include <vector>

#include "updom/graph.hpp"

namespace updom {

enum class Verdict { polynomial_time, np_hard };

// Complexity classification of the upper dominating set problem restricted to
// H-free graphs, following the case analysis of the dichotomy proof rather
// than only its headline condition; the branch and witness make the applied
// argument checkable.
struct ClassVerdict {
    Verdict verdict = Verdict::np_hard;
    std::string branch;   // decision-tree case, e.g. "two-paths k+t>=5"
    std::string theorem;  // justification, e.g. "hardness-cobipartite"

    std::vector<int> cycle;            // cycle branches: a shortest cycle of H
    std::vector<int> claw_embedding;   // claw branch
    std::vector<int> component_sizes;  // >=3 components branch: path orders
    int k = 0, t = 0;                  // two-paths branches (t = 0 for one path)
    std::string poly_host;             // polynomial branches: "2K2" or "P4"
    std::vector<int> poly_embedding;   // embedding of H into the host
};

ClassVerdict classify_monogenic(const Graph& h);

// The decision tree agrees with the headline condition: polynomial-time iff
// H is an induced subgraph of 2K2 or of P4.
bool dichotomy_consistency(const Graph& h);

}  // namespace updom
