#include "updom/domination.hpp"

#include <climits>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace updom {

namespace {

void check_host(const Graph& g, const VertexSet& s, const char* what) {
    if (s.universe() != g.n())
        throw PreconditionError(std::string(what) + ": vertex set not over this graph");
}

}  // namespace

// --- predicates -------------------------------------------------------------

bool is_dominating(const Graph& g, const VertexSet& d) {
    check_host(g, d, "is_dominating");
    for (int v = 0; v < g.n(); ++v)
        if (!d.contains(v) && !g.neighbors(v).intersects(d)) return false;
    return true;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
    if (!is_dominating(g, d)) return false;
    // x is non-removable iff some y (possibly x itself) is dominated by x alone
    for (int x = d.first(); x != -1; x = d.next_after(x)) {
        bool pinned = false;
        VertexSet around = g.closed_neighbors(x);
        for (int y = around.first(); y != -1 && !pinned; y = around.next_after(y)) {
            VertexSet doms = g.closed_neighbors(y) & d;
            pinned = doms.size() == 1 && doms.contains(x);
        }
        if (!pinned) return false;
    }
    return true;
}

VertexSet private_neighbours(const Graph& g, const VertexSet& d, int x) {
    check_host(g, d, "private_neighbours");
    if (!d.contains(x))
        throw PreconditionError("private_neighbours: vertex " + std::to_string(x) +
                                " is not in the set");
    VertexSet result(g.n());
    const VertexSet& nx = g.neighbors(x);
    for (int y = nx.first(); y != -1; y = nx.next_after(y)) {
        if (d.contains(y)) continue;
        VertexSet doms = g.neighbors(y) & d;
        if (doms.size() == 1 && doms.contains(x)) result.add(y);
    }
    return result;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    check_host(g, s, "is_maximal_independent");
    if (!is_independent_set(g, s)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (!s.contains(v) && !g.neighbors(v).intersects(s)) return false;
    return true;
}

VertexSet greedy_minimalize(const Graph& g, VertexSet d) {
    check_host(g, d, "greedy_minimalize");
    if (!is_dominating(g, d)) throw PreconditionError("greedy_minimalize: set is not dominating");
    // one ascending pass suffices: removals never make other vertices removable
    for (int x = d.first(); x != -1; x = d.next_after(x)) {
        VertexSet without = d;
        without.remove(x);
        if (is_dominating(g, without)) d = without;
    }
    return d;
}

// --- normalization ----------------------------------------------------------

Normalized normalize_minimal_dominating(const Graph& g, const VertexSet& d) {
    check_host(g, d, "normalize_minimal_dominating");
    if (!is_minimal_dominating(g, d))
        throw PreconditionError("normalize_minimal_dominating: input is not a minimal dominating set");

    VertexSet result = d;
    const int guard = 2 * g.n() + 2;
    int iter = 0;
    while (true) {
        int x = -1;
        for (int v = result.first(); v != -1; v = result.next_after(v)) {
            if (g.degree(v) == 0) continue;  // single-vertex component, kept as is
            if (private_neighbours(g, result, v).empty()) {
                x = v;
                break;
            }
        }
        if (x == -1) break;
        if (++iter > guard)
            throw InvariantError("normalize_minimal_dominating did not converge");
        // x has no private neighbour, so it is isolated in the set and every
        // neighbour y has a second dominator; swap x for its lowest neighbour
        if (g.neighbors(x).intersects(result))
            throw InvariantError("vertex without private neighbour is not isolated in the set");
        int y = (g.neighbors(x) - result).first();
        if (y == -1) throw InvariantError("isolated set vertex has no neighbour outside the set");
        result.remove(x);
        result.add(y);
        if (!is_dominating(g, result))
            throw InvariantError("swap broke domination during normalization");
        result = greedy_minimalize(g, result);
    }

    Normalized out{result, VertexSet(g.n())};
    for (int v = result.first(); v != -1; v = result.next_after(v))
        if (g.degree(v) == 0) out.kept_isolated.add(v);
    if (!is_minimal_dominating(g, result) || result.size() > d.size())
        throw InvariantError("normalization postcondition failed");
    return out;
}

// --- mask kernels -----------------------------------------------------------

int default_brute_cap() {
    static int cap = [] {
        if (const char* env = std::getenv("UPDOM_MAX_N")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 24;
    }();
    return cap;
}

namespace {

constexpr int kKernelLimit = 62;

struct MaskGraph {
    int n = 0;
    uint64_t full = 0;
    std::vector<uint64_t> open;
    std::vector<uint64_t> closed;
    std::vector<uint64_t> suffix;  // OR of closed[v] for v >= i
};

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.n() > cap)
        throw PreconditionError(std::string(what) + ": instance with n=" + std::to_string(g.n()) +
                                " exceeds the brute-force cap " + std::to_string(cap) +
                                " (UPDOM_MAX_N overrides the default)");
    if (g.n() > kKernelLimit)
        throw PreconditionError(std::string(what) + ": subset kernel supports at most " +
                                std::to_string(kKernelLimit) + " vertices");
}

MaskGraph mask_graph(const Graph& g) {
    MaskGraph mg;
    mg.n = g.n();
    mg.full = mg.n == 0 ? 0 : (~0ull >> (64 - mg.n));
    mg.open.assign(mg.n, 0);
    mg.closed.assign(mg.n, 0);
    for (int v = 0; v < mg.n; ++v) {
        mg.open[v] = g.neighbors(v).word(0);
        mg.closed[v] = mg.open[v] | (1ull << v);
    }
    mg.suffix.assign(mg.n + 1, 0);
    for (int v = mg.n - 1; v >= 0; --v) mg.suffix[v] = mg.suffix[v + 1] | mg.closed[v];
    return mg;
}

VertexSet mask_to_set(int n, uint64_t mask) {
    VertexSet s(n);
    while (mask) {
        s.add(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return s;
}

// DFS over include/exclude decisions that reaches a leaf exactly for the
// minimal dominating sets. Soundness of the two structural prunes:
//  - a vertex that is uncovered and out of reach of all undecided vertices
//    can never be dominated;
//  - a selected vertex all of whose closed neighbours are covered twice can
//    never gain a private vertex, so no completion is minimal.
// `bound(popcount, depth)` adds search-specific size pruning; it must never
// exclude a leaf the caller still cares about.
template <class Visit, class Bound>
void min_dom_dfs(const MaskGraph& mg, int i, uint64_t chosen, int pc, uint64_t covered,
                 uint64_t multi, Visit&& visit, Bound&& bound) {
    if ((mg.full & ~covered & ~mg.suffix[i]) != 0) return;
    if (!bound(pc, i)) return;
    if (i == mg.n) {
        visit(chosen, pc);
        return;
    }
    // include i
    uint64_t nmulti = multi | (covered & mg.closed[i]);
    bool alive = true;
    for (uint64_t s = chosen | (1ull << i); s; s &= s - 1) {
        if ((mg.closed[__builtin_ctzll(s)] & ~nmulti) == 0) {
            alive = false;
            break;
        }
    }
    if (alive)
        min_dom_dfs(mg, i + 1, chosen | (1ull << i), pc + 1, covered | mg.closed[i], nmulti,
                    visit, bound);
    // exclude i
    min_dom_dfs(mg, i + 1, chosen, pc, covered, multi, visit, bound);
}

template <class Visit, class Bound>
void min_dom_search(const MaskGraph& mg, Visit&& visit, Bound&& bound) {
    min_dom_dfs(mg, 0, 0, 0, 0, 0, visit, bound);
}

// Independent-set search over the same mask representation.
template <class Visit>
void alpha_dfs(const MaskGraph& mg, int i, uint64_t chosen, int pc, int& best, Visit&& visit) {
    if (pc + (mg.n - i) <= best) return;
    if (i == mg.n) {
        best = pc;
        visit(chosen, pc);
        return;
    }
    if ((mg.open[i] & chosen) == 0)
        alpha_dfs(mg, i + 1, chosen | (1ull << i), pc + 1, best, visit);
    alpha_dfs(mg, i + 1, chosen, pc, best, visit);
}

}  // namespace

OracleResult brute_alpha(const Graph& g, int cap) {
    check_cap(g, cap, "brute_alpha");
    MaskGraph mg = mask_graph(g);
    int best = -1;
    uint64_t bw = 0;
    alpha_dfs(mg, 0, 0, 0, best, [&](uint64_t chosen, int) { bw = chosen; });
    return {best, mask_to_set(g.n(), bw)};
}

OracleResult brute_gamma(const Graph& g, int cap) {
    check_cap(g, cap, "brute_gamma");
    MaskGraph mg = mask_graph(g);
    int best = INT_MAX;
    uint64_t bw = 0;
    min_dom_search(
        mg,
        [&](uint64_t chosen, int pc) {
            if (pc < best) {
                best = pc;
                bw = chosen;
            }
        },
        [&](int pc, int) { return pc < best; });
    if (best == INT_MAX) best = 0;  // n == 0
    return {best, mask_to_set(g.n(), bw)};
}

OracleResult brute_Gamma(const Graph& g, int cap) {
    check_cap(g, cap, "brute_Gamma");
    MaskGraph mg = mask_graph(g);
    int best = -1;
    uint64_t bw = 0;
    min_dom_search(
        mg,
        [&](uint64_t chosen, int pc) {
            best = pc;
            bw = chosen;
        },
        [&](int pc, int i) { return pc + (mg.n - i) > best; });
    if (best < 0) throw InvariantError("brute_Gamma found no minimal dominating set");
    return {best, mask_to_set(g.n(), bw)};
}

OracleResult brute_Gamma_parallel(const Graph& g, int cap) {
    check_cap(g, cap, "brute_Gamma_parallel");
    MaskGraph mg = mask_graph(g);
    const int split = std::max(0, std::min(mg.n - 4, 12));

    struct Prefix {
        uint64_t chosen, covered, multi;
        int pc;
    };
    std::vector<Prefix> prefixes;
    // walk the same pruned tree down to the split depth, in DFS order
    struct Collector {
        const MaskGraph& mg;
        int split;
        std::vector<Prefix>& out;
        void walk(int i, uint64_t chosen, int pc, uint64_t covered, uint64_t multi) {
            if ((mg.full & ~covered & ~mg.suffix[i]) != 0) return;
            if (i == split) {
                out.push_back({chosen, covered, multi, pc});
                return;
            }
            uint64_t nmulti = multi | (covered & mg.closed[i]);
            bool alive = true;
            for (uint64_t s = chosen | (1ull << i); s; s &= s - 1) {
                if ((mg.closed[__builtin_ctzll(s)] & ~nmulti) == 0) {
                    alive = false;
                    break;
                }
            }
            if (alive) walk(i + 1, chosen | (1ull << i), pc + 1, covered | mg.closed[i], nmulti);
            walk(i + 1, chosen, pc, covered, multi);
        }
    };
    Collector{mg, split, prefixes}.walk(0, 0, 0, 0, 0);

    std::vector<int> sizes(prefixes.size(), -1);
    std::vector<uint64_t> wits(prefixes.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long k = 0; k < (long long)prefixes.size(); ++k) {
        const Prefix& p = prefixes[k];
        int best = -1;
        uint64_t bw = 0;
        min_dom_dfs(
            mg, split, p.chosen, p.pc, p.covered, p.multi,
            [&](uint64_t chosen, int pc) {
                best = pc;
                bw = chosen;
            },
            [&](int pc, int i) { return pc + (mg.n - i) > best; });
        sizes[k] = best;
        wits[k] = bw;
    }
    // sequential reduction in prefix order reproduces the serial witness
    int best = -1;
    uint64_t bw = 0;
    for (size_t k = 0; k < prefixes.size(); ++k) {
        if (sizes[k] > best) {
            best = sizes[k];
            bw = wits[k];
        }
    }
    if (best < 0) throw InvariantError("brute_Gamma_parallel found no minimal dominating set");
    return {best, mask_to_set(g.n(), bw)};
}

void enumerate_minimal_dominating(const Graph& g,
                                  const std::function<void(const VertexSet&)>& visit, int cap) {
    check_cap(g, cap, "enumerate_minimal_dominating");
    MaskGraph mg = mask_graph(g);
    min_dom_search(
        mg, [&](uint64_t chosen, int) { visit(mask_to_set(g.n(), chosen)); },
        [](int, int) { return true; });
}

long long count_minimal_dominating(const Graph& g, int cap) {
    check_cap(g, cap, "count_minimal_dominating");
    MaskGraph mg = mask_graph(g);
    long long count = 0;
    min_dom_search(
        mg, [&](uint64_t, int) { ++count; }, [](int, int) { return true; });
    return count;
}

void enumerate_maximal_independent(const Graph& g,
                                   const std::function<void(const VertexSet&)>& visit) {
    const int n = g.n();
    std::vector<VertexSet> nonadj(n, VertexSet(n));
    for (int v = 0; v < n; ++v) {
        nonadj[v] = ~g.neighbors(v);
        nonadj[v].remove(v);
    }
    // maximal cliques of the complement, with the usual pivoting
    struct BK {
        const std::vector<VertexSet>& nonadj;
        const std::function<void(const VertexSet&)>& visit;
        void rec(const VertexSet& r, VertexSet p, VertexSet x) {
            if (p.empty() && x.empty()) {
                visit(r);
                return;
            }
            int pivot = -1, best = -1;
            auto consider = [&](int u) {
                int c = (p & nonadj[u]).size();
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            };
            p.for_each(consider);
            x.for_each(consider);
            VertexSet cand = p - nonadj[pivot];
            for (int v = cand.first(); v != -1; v = cand.next_after(v)) {
                VertexSet r2 = r;
                r2.add(v);
                rec(r2, p & nonadj[v], x & nonadj[v]);
                p.remove(v);
                x.add(v);
            }
        }
    };
    BK{nonadj, visit}.rec(VertexSet(n), VertexSet::full(n), VertexSet(n));
}

InvariantReport invariants(const Graph& g, int cap) {
    InvariantReport r;
    auto a = brute_alpha(g, cap);
    auto lo = brute_gamma(g, cap);
    auto hi = brute_Gamma(g, cap);
    r.alpha = a.value;
    r.gamma_lower = lo.value;
    r.gamma_upper = hi.value;
    r.alpha_witness = a.witness;
    r.gamma_witness = lo.witness;
    r.Gamma_witness = hi.witness;
    if (r.gamma_lower > r.gamma_upper || r.alpha > r.gamma_upper)
        throw InvariantError("invariant ordering gamma <= Gamma, alpha <= Gamma failed");
    return r;
}

// --- serial reference implementations ---------------------------------------

namespace ref {

namespace {

template <class Keep>
OracleResult subset_scan(const Graph& g, int cap, const char* what, bool maximize, Keep&& keep) {
    check_cap(g, cap, what);
    const int n = g.n();
    OracleResult best{maximize ? -1 : INT_MAX, VertexSet(n)};
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet s = mask_to_set(n, mask);
        if (!keep(s)) continue;
        int size = s.size();
        if (maximize ? size > best.value : size < best.value) best = {size, s};
    }
    if (best.value == -1 || best.value == INT_MAX) best.value = 0;
    return best;
}

}  // namespace

OracleResult brute_alpha(const Graph& g, int cap) {
    return subset_scan(g, cap, "ref::brute_alpha", true,
                       [&](const VertexSet& s) { return is_independent_set(g, s); });
}

OracleResult brute_gamma(const Graph& g, int cap) {
    return subset_scan(g, cap, "ref::brute_gamma", false,
                       [&](const VertexSet& s) { return is_dominating(g, s); });
}

OracleResult brute_Gamma(const Graph& g, int cap) {
    return subset_scan(g, cap, "ref::brute_Gamma", true,
                       [&](const VertexSet& s) { return is_minimal_dominating(g, s); });
}

}  // namespace ref

}  // namespace updom
