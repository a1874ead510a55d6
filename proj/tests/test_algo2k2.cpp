#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "updom/algo2k2.hpp"
#include "updom/corpora.hpp"
#include "updom/families.hpp"

using namespace updom;

TEST_CASE("2k2 detection") {
    CHECK(is_2k2_free(cycle(4)));
    CHECK(is_2k2_free(prism()));
    CHECK(is_2k2_free(complete(6)));
    auto w = find_induced_2k2(cycle(6));
    REQUIRE(w.has_value());
    CHECK(*w == std::array<int, 4>{0, 1, 3, 4});

    Rng rng(3);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_split_graph(4 + int(rand_below(rng, 8)), rng);
        CHECK(is_2k2_free(g));
        CHECK(is_2k2_free(g) == !contains_induced(g, two_k2()).has_value());
    }
}

TEST_CASE("anti-neighbourhood") {
    CHECK(anti_neighbourhood(cycle(5), VertexSet::of(5, {0})) == VertexSet::of(5, {2, 3}));
    CHECK(anti_neighbourhood(complete(4), VertexSet::of(4, {0})).empty());
    CHECK(anti_neighbourhood(prism(), VertexSet::of(6, {0, 1, 2})).empty());
    CHECK(anti_neighbourhood(empty_graph(3), VertexSet(3)) == VertexSet::full(3));
}

TEST_CASE("triangle enumeration in lexicographic order") {
    CHECK(triangles(complete(4)).size() == 4);
    CHECK(triangles(cycle(4)).empty());
    auto t = triangles(prism());
    REQUIRE(t.size() == 2);
    CHECK(t[0] == std::array<int, 3>{0, 1, 2});
    CHECK(t[1] == std::array<int, 3>{3, 4, 5});
}

TEST_CASE("algorithm examples") {
    auto sol = upper_dominating_2k2(prism());
    CHECK(sol.set.size() == 3);
    CHECK(sol.method == SolveMethod::triangle);
    CHECK(brute_alpha(prism()).value == 2);
    CHECK(is_minimal_dominating(prism(), sol.set));

    auto c4 = upper_dominating_2k2(cycle(4));
    CHECK(c4.set.size() == 2);
    CHECK(c4.method == SolveMethod::independent_set);

    // a triangle with a pendant vertex at 0
    Graph pend = make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    auto ps = upper_dominating_2k2(pend);
    CHECK(ps.set.size() == 2);
    CHECK(ps.method == SolveMethod::independent_set);
    CHECK(ps.set == VertexSet::of(4, {1, 3}));  // lexicographically smallest witness
}

TEST_CASE("algorithm rejects graphs with an induced 2K2") {
    CHECK_THROWS_AS(upper_dominating_2k2(cycle(6)), TwoK2Error);
    try {
        upper_dominating_2k2(two_k2());
    } catch (const TwoK2Error& e) {
        CHECK(e.witness() == std::array<int, 4>{0, 1, 2, 3});
    }
}

TEST_CASE("oracle equivalence on small corpora") {
    for (int n = 0; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (!is_2k2_free(g)) return;
            auto sol = upper_dominating_2k2(g, false);
            CHECK(sol.set.size() == brute_Gamma(g).value);
            CHECK(is_minimal_dominating(g, sol.set));
        });
    }
    Rng rng(29);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_2k2_free_graph(7 + int(rand_below(rng, 5)), rng);
        auto sol = upper_dominating_2k2(g);
        CHECK(sol.set.size() == brute_Gamma(g).value);
        CHECK(is_minimal_dominating(g, sol.set));
    }
}

TEST_CASE("triangle corollary") {
    CHECK(verify_triangle_corollary(prism()).holds);
    CHECK(verify_triangle_corollary(cycle(4)).holds);
    CHECK_THROWS_AS(verify_triangle_corollary(cycle(6)), TwoK2Error);
    for (int n = 0; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (is_2k2_free(g)) CHECK(verify_triangle_corollary(g).holds);
        });
    }
}

TEST_CASE("the prism's oversized solutions are exactly its triangles") {
    // both size-3 minimal dominating sets are triangles with empty anti-neighbourhood
    int oversized = 0;
    enumerate_minimal_dominating(prism(), [&](const VertexSet& d) {
        if (d.size() >= 3) {
            ++oversized;
            bool is_triangle = d == VertexSet::of(6, {0, 1, 2}) || d == VertexSet::of(6, {3, 4, 5});
            CHECK(is_triangle);
        }
    });
    CHECK(oversized == 2);
}
