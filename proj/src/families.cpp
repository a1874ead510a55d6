#include "updom/families.hpp"

namespace updom {

Graph empty_graph(int n) { return Graph(n); }

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph claw() { return star(3); }

Graph paw() {
    Graph g = complete(3);
    Graph p(4);
    for (auto [u, v] : g.edge_list()) p.add_edge(u, v);
    p.add_edge(0, 3);
    return p;
}

Graph diamond() {
    Graph g = complete(4);
    Graph d(4);
    for (auto [u, v] : g.edge_list())
        if (!(u == 0 && v == 1)) d.add_edge(u, v);
    return d;
}

Graph two_k2() { return make_graph(4, {{0, 1}, {2, 3}}); }

Graph p4() { return path(4); }

Graph prism() {
    return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edge_list()) g.add_edge(u, v);
    for (auto [u, v] : b.edge_list()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

}  // namespace updom
