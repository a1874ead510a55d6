#pragma once

#include <array>
#include <optional>

#include "updom/domination.hpp"
#include "updom/graph.hpp"

namespace updom {

// Vertices a, b, c, d such that ab and cd are edges and no edge joins
// {a, b} to {c, d}; nullopt when g is 2K2-free. Scans edge pairs in
// ascending order, so the witness is deterministic.
std::optional<std::array<int, 4>> find_induced_2k2(const Graph& g);
bool is_2k2_free(const Graph& g);

// All v outside u with no neighbour in u.
VertexSet anti_neighbourhood(const Graph& g, const VertexSet& u);

// Triangles in ascending lexicographic order of their sorted vertex triples.
std::vector<std::array<int, 3>> triangles(const Graph& g);

enum class SolveMethod { independent_set, triangle };

struct UpperDominationSolution {
    VertexSet set;
    SolveMethod method = SolveMethod::independent_set;
};

// Upper dominating set of a 2K2-free graph in polynomial time: the best of a
// maximum independent set and, per triangle T, the set T together with its
// anti-neighbourhood. Ties go to the lexicographically smallest witness.
// Throws TwoK2Error when the input contains an induced 2K2 (the check can be
// disabled for trusted corpora).
UpperDominationSolution upper_dominating_2k2(const Graph& g, bool check_precondition = true);

struct CorollaryCheck {
    bool holds = true;
    std::optional<VertexSet> counterexample;
};

// Exhaustively verifies that every minimal dominating set larger than the
// independence number is a triangle plus its anti-neighbourhood.
CorollaryCheck verify_triangle_corollary(const Graph& g, int cap = default_brute_cap());

}  // namespace updom
