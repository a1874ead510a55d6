#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_helpers.hpp"
#include "updom/constructions.hpp"
#include "updom/corpora.hpp"
#include "updom/families.hpp"
#include "updom/graph6.hpp"

using namespace updom;

TEST_CASE("make_graph builds the listed edges and rejects bad input") {
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.m() == 3);
    CHECK(graphs_equal(k3, complete(3)));

    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(graphs_equal(c4, cycle(4)));

    CHECK(make_graph(3, {{0, 1}, {1, 0}, {0, 1}}).m() == 1);  // duplicates collapse
    CHECK_THROWS_AS(make_graph(2, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(make_graph(2, {{0, 5}}), PreconditionError);
}

TEST_CASE("complement") {
    CHECK(complement(complete(3)).m() == 0);
    CHECK(isomorphic(complement(cycle(5)), cycle(5)));  // C5 is self-complementary

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(3 + int(rand_below(rng, 8)), rand_unit(rng), rng);
        CHECK(graphs_equal(complement(complement(g)), g));
    }
}

TEST_CASE("girth") {
    CHECK(girth(cycle(5)) == 5);
    CHECK(girth(cycle(3)) == 3);
    CHECK_FALSE(girth(path(6)).has_value());
    CHECK_FALSE(girth(tripod(3, 2, 4)).has_value());
    CHECK(girth(q_construct(cycle(3)).graph) == 3);  // old vertices form a clique
    CHECK(girth(testing::petersen()) == 5);

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(3 + int(rand_below(rng, 10)), 0.05 + 0.4 * rand_unit(rng), rng);
        CHECK(girth(g) == testing::girth_by_edge_removal(g));
        if (auto cyc = girth_cycle(g)) {
            CHECK(int(cyc->size()) == *girth(g));
            for (size_t k = 0; k < cyc->size(); ++k)
                CHECK(g.has_edge((*cyc)[k], (*cyc)[(k + 1) % cyc->size()]));
        }
    }
}

TEST_CASE("induced subgraphs") {
    auto sub = induced_subgraph(cycle(4), VertexSet::of(4, {0, 1, 2}));
    CHECK(isomorphic(sub.graph, path(3)));
    CHECK(sub.old_id_of == std::vector<int>{0, 1, 2});

    CHECK(induced_subgraph(complete(5), VertexSet(5)).graph.n() == 0);
    CHECK(isomorphic(induced_subgraph(complete(5), VertexSet::of(5, {1, 3, 4})).graph,
                     complete(3)));
}

TEST_CASE("contains_induced agrees with the exhaustive oracle") {
    CHECK(contains_induced(p4(), path(3)).has_value());
    CHECK_FALSE(contains_induced(cycle(4), two_k2()).has_value());

    auto phi = contains_induced(cycle(6), two_k2());
    REQUIRE(phi.has_value());
    CHECK(check_embedding(cycle(6), two_k2(), *phi));

    CHECK_FALSE(testing::exhaustive_contains_induced(cycle(4), two_k2()));
    CHECK(testing::exhaustive_contains_induced(cycle(6), two_k2()));
    CHECK_FALSE(testing::exhaustive_contains_induced(prism(), two_k2()));

    Rng rng(23);
    std::vector<Graph> patterns = {two_k2(), path(3), claw(), cycle(4), complete(3),
                                   empty_graph(3), paw()};
    for (int i = 0; i < 150; ++i) {
        Graph g = random_graph(4 + int(rand_below(rng, 4)), 0.2 + 0.6 * rand_unit(rng), rng);
        const Graph& h = patterns[rand_below(rng, patterns.size())];
        auto fast = contains_induced(g, h);
        CHECK(fast.has_value() == testing::exhaustive_contains_induced(g, h));
        if (fast) CHECK(check_embedding(g, h, *fast));
    }
}

TEST_CASE("is_free") {
    CHECK(is_free(cycle(5), {cycle(3), cycle(4)}));
    CHECK_FALSE(is_free(complete(4), {complete(3)}));
    auto witness = find_induced(complete(4), {complete(3)});
    REQUIRE(witness.has_value());
    CHECK(check_embedding(complete(4), complete(3), witness->embedding));
    CHECK(is_free(prism(), {two_k2()}));
}

TEST_CASE("connected components") {
    auto comps = connected_components(two_k2());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 2);
    CHECK(comps[1].size() == 2);
    CHECK(connected_components(cycle(5)).size() == 1);
    CHECK(connected_components(empty_graph(3)).size() == 3);
    CHECK(is_connected(empty_graph(1)));
    CHECK(is_connected(empty_graph(0)));
}

TEST_CASE("bipartite and co-bipartite") {
    CHECK(is_cobipartite(complete(5)).has_value());
    CHECK_FALSE(is_cobipartite(empty_graph(3)).has_value());
    CHECK(is_bipartite(complete_bipartite(3, 4)).has_value());
    CHECK_FALSE(is_bipartite(cycle(5)).has_value());

    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_graph(2 + int(rand_below(rng, 6)), rand_unit(rng), rng);
        auto cliques = is_cobipartite(q_construct(g).graph);
        REQUIRE(cliques.has_value());
        CHECK(is_clique(q_construct(g).graph, (*cliques)[0]));
        CHECK(is_clique(q_construct(g).graph, (*cliques)[1]));
    }
}

TEST_CASE("co-bipartite equals free of odd anticycles on all graphs up to 7 vertices") {
    std::vector<Graph> anticycles = {complement(cycle(3)), complement(cycle(5)),
                                     complement(cycle(7))};
    for (int n = 0; n <= 7; ++n) {
        const long long total = labeled_graph_count(n);
        long long mismatches = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : mismatches)
#endif
        for (long long mask = 0; mask < total; ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            if (is_cobipartite(g).has_value() != is_free(g, anticycles)) ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("graph6 encoding matches hand-computed strings") {
    CHECK(graph6_encode(complete(3)) == "Bw");
    CHECK(graph6_encode(path(2)) == "A_");
    CHECK(graph6_encode(empty_graph(2)) == "A?");
    CHECK(graph6_encode(empty_graph(0)) == "?");
    CHECK(graph6_encode(complete(4)) == "C~");

    CHECK(graphs_equal(graph6_decode("Bw"), complete(3)));
    CHECK(graphs_equal(graph6_decode(">>graph6<<Bw\n"), complete(3)));
}

TEST_CASE("graph6 round trips, including the multi-byte vertex count") {
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
        int n = int(rand_below(rng, 30));
        Graph g = random_graph(n, rand_unit(rng), rng);
        CHECK(graphs_equal(graph6_decode(graph6_encode(g)), g));
    }
    for (int n : {63, 64, 80}) {
        Graph g = random_graph(n, 0.1, rng);
        std::string enc = graph6_encode(g);
        CHECK(enc[0] == char(126));
        CHECK(graphs_equal(graph6_decode(enc), g));
    }
    // n = 63 header: 126 then 18-bit big-endian count
    std::string enc63 = graph6_encode(empty_graph(63));
    CHECK(enc63.substr(0, 4) == std::string({char(126), char(63), char(63), char(126)}));
}

TEST_CASE("graph6 rejects malformed input with a byte offset") {
    CHECK_THROWS_WITH_AS(graph6_decode("B"), doctest::Contains("byte offset"),
                         PreconditionError);
    CHECK_THROWS_WITH_AS(graph6_decode("Bw!"), doctest::Contains("byte offset"),
                         PreconditionError);
    CHECK_THROWS_WITH_AS(graph6_decode(std::string("B") + char(20)),
                         doctest::Contains("byte offset"), PreconditionError);
    CHECK_THROWS_AS(graph6_decode(""), PreconditionError);
}

TEST_CASE("edge list io") {
    std::ostringstream out;
    write_edge_list(out, cycle(4));
    CHECK(out.str() == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    Graph back = parse_graph(out.str());
    CHECK(graphs_equal(back, cycle(4)));
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n", GraphFormat::edge_list), PreconditionError);
}

TEST_CASE("vertex set ordering for witnesses") {
    auto s = [](std::initializer_list<int> vs) { return VertexSet::of(6, vs); };
    CHECK(VertexSet::lex_less(s({0, 2, 3}), s({0, 2, 4})));
    CHECK(VertexSet::lex_less(s({0, 2, 4}), s({1, 2})));
    CHECK(VertexSet::lex_less(s({0}), s({0, 1})));
    CHECK(VertexSet::lex_less(s({1, 2}), s({3})));
    CHECK_FALSE(VertexSet::lex_less(s({3}), s({1, 2})));
    CHECK_FALSE(VertexSet::lex_less(s({0, 1}), s({0, 1})));
    CHECK(VertexSet::lex_less(s({}), s({0})));  // the empty prefix is smallest
    CHECK_FALSE(VertexSet::lex_less(s({0}), s({})));
}
