#include "updom/algo2k2.hpp"

#include <algorithm>

namespace updom {

std::optional<std::array<int, 4>> find_induced_2k2(const Graph& g) {
    auto edges = g.edge_list();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d))
                continue;
            return std::array<int, 4>{a, b, c, d};
        }
    }
    return std::nullopt;
}

bool is_2k2_free(const Graph& g) { return !find_induced_2k2(g).has_value(); }

VertexSet anti_neighbourhood(const Graph& g, const VertexSet& u) {
    if (u.universe() != g.n())
        throw PreconditionError("anti_neighbourhood: vertex set not over this graph");
    VertexSet a(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (!u.contains(v) && !g.neighbors(v).intersects(u)) a.add(v);
    return a;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = g.neighbors(i).next_after(i); j != -1; j = g.neighbors(i).next_after(j)) {
            VertexSet common = g.neighbors(i) & g.neighbors(j);
            for (int k = common.next_after(j); k != -1; k = common.next_after(k))
                out.push_back({i, j, k});
        }
    }
    return out;
}

UpperDominationSolution upper_dominating_2k2(const Graph& g, bool check_precondition) {
    if (check_precondition) {
        if (auto w = find_induced_2k2(g))
            throw TwoK2Error("input graph contains an induced 2K2", *w);
    }

    // step 1: a maximum independent set, which is a minimal dominating set
    UpperDominationSolution best{VertexSet(g.n()), SolveMethod::independent_set};
    int best_size = -1;
    enumerate_maximal_independent(g, [&](const VertexSet& s) {
        int k = s.size();
        if (k > best_size || (k == best_size && VertexSet::lex_less(s, best.set))) {
            best.set = s;
            best.method = SolveMethod::independent_set;
            best_size = k;
        }
    });

    // step 2: a triangle plus its anti-neighbourhood, when minimal dominating
    for (const auto& t : triangles(g)) {
        VertexSet m = VertexSet::of(g.n(), {t[0], t[1], t[2]});
        m |= anti_neighbourhood(g, m);
        if (!is_minimal_dominating(g, m)) continue;
        int k = m.size();
        if (k > best_size || (k == best_size && VertexSet::lex_less(m, best.set))) {
            best.set = m;
            best.method = SolveMethod::triangle;
            best_size = k;
        }
    }
    return best;
}

CorollaryCheck verify_triangle_corollary(const Graph& g, int cap) {
    if (auto w = find_induced_2k2(g))
        throw TwoK2Error("verify_triangle_corollary: input contains an induced 2K2", *w);

    int alpha = brute_alpha(g, cap).value;
    std::vector<VertexSet> candidates;
    for (const auto& t : triangles(g)) {
        VertexSet m = VertexSet::of(g.n(), {t[0], t[1], t[2]});
        m |= anti_neighbourhood(g, m);
        candidates.push_back(std::move(m));
    }

    CorollaryCheck result;
    enumerate_minimal_dominating(
        g,
        [&](const VertexSet& d) {
            if (!result.holds || d.size() <= alpha) return;
            if (std::find(candidates.begin(), candidates.end(), d) == candidates.end()) {
                result.holds = false;
                result.counterexample = d;
            }
        },
        cap);
    return result;
}

}  // namespace updom
