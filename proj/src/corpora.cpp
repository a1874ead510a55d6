#include "updom/corpora.hpp"

#include <algorithm>
#include <numeric>

#include "updom/algo2k2.hpp"

namespace updom {

uint64_t rand_below(Rng& rng, uint64_t bound) {
    if (bound == 0) throw PreconditionError("rand_below: empty range");
    uint64_t limit = ~0ull - (~0ull % bound + 1) % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

double rand_unit(Rng& rng) { return double(rng() >> 11) * (1.0 / 9007199254740992.0); }

bool rand_bernoulli(Rng& rng, double p) { return rand_unit(rng) < p; }

Graph graph_from_edge_mask(int n, uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

long long labeled_graph_count(int n) {
    int pairs = n * (n - 1) / 2;
    if (pairs >= 63) throw PreconditionError("labeled_graph_count: too many vertices");
    return 1LL << pairs;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
    const long long total = labeled_graph_count(n);
    for (long long mask = 0; mask < total; ++mask) visit(graph_from_edge_mask(n, mask));
}

Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_bernoulli(rng, p)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, double p, Rng& rng) {
    for (int tries = 0; tries < 10000; ++tries) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
    // connect what we have along a random spanning chain
    Graph g = random_graph(n, p, rng);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rand_below(rng, i + 1)]);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(order[i], order[i + 1]);
    return g;
}

Graph random_split_graph(int n, Rng& rng) {
    int clique_size = n == 0 ? 0 : 1 + int(rand_below(rng, n));
    Graph g(n);
    for (int u = 0; u < clique_size; ++u)
        for (int v = u + 1; v < clique_size; ++v) g.add_edge(u, v);
    for (int u = 0; u < clique_size; ++u)
        for (int v = clique_size; v < n; ++v)
            if (rand_bernoulli(rng, 0.5)) g.add_edge(u, v);
    return g;
}

Graph random_2k2_free_graph(int n, Rng& rng) {
    for (int tries = 0; tries < 60; ++tries) {
        double p = 0.45 + 0.01 * tries;
        Graph g = random_graph(n, p, rng);
        if (is_2k2_free(g)) return g;
    }
    return random_split_graph(n, rng);
}

Graph random_cubic_graph(int n, Rng& rng) {
    if (n < 4 || n % 2 != 0)
        throw PreconditionError("random_cubic_graph: n must be even and >= 4");
    while (true) {
        std::vector<int> stubs;
        stubs.reserve(3 * n);
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        for (int i = int(stubs.size()) - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rand_below(rng, i + 1)]);
        Graph g(n);
        bool simple = true;
        for (size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v)) simple = false;
            else g.add_edge(u, v);
        }
        if (simple) return g;
    }
}

Graph random_cyclic_graph(int n, double p, Rng& rng) {
    for (int tries = 0; tries < 10000; ++tries) {
        Graph g = random_graph(n, p, rng);
        if (girth(g).has_value()) return g;
    }
    // guaranteed fallback: add a triangle
    Graph g = random_graph(n, p, rng);
    if (n >= 3) {
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
    }
    return g;
}

}  // namespace updom
