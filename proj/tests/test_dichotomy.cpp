#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "updom/corpora.hpp"
#include "updom/dichotomy.hpp"
#include "updom/families.hpp"

using namespace updom;

TEST_CASE("named verdicts") {
    auto v = classify_monogenic(two_k2());
    CHECK(v.verdict == Verdict::polynomial_time);
    CHECK(v.branch == "H=2K2");
    CHECK(v.theorem == "poly-2k2-algorithm");

    v = classify_monogenic(p4());
    CHECK(v.verdict == Verdict::polynomial_time);
    CHECK(v.branch == "H=P4");

    v = classify_monogenic(path(3));
    CHECK(v.verdict == Verdict::polynomial_time);
    CHECK(v.branch == "two-paths k+t<=3");
    CHECK(v.poly_host == "P4");

    v = classify_monogenic(claw());
    CHECK(v.verdict == Verdict::np_hard);
    CHECK(v.branch == "claw");
    CHECK(v.theorem == "hardness-cobipartite");
    CHECK(check_embedding(claw(), claw(), v.claw_embedding));

    v = classify_monogenic(path(5));
    CHECK(v.verdict == Verdict::np_hard);
    CHECK(v.branch == "two-paths k+t>=5");
    CHECK(v.k == 5);
    CHECK(v.t == 0);

    v = classify_monogenic(empty_graph(3));
    CHECK(v.verdict == Verdict::np_hard);
    CHECK(v.branch == ">=3 components");

    v = classify_monogenic(cycle(3));
    CHECK(v.verdict == Verdict::np_hard);
    CHECK(v.branch == "cycle length<=5");
    CHECK(v.theorem == "hardness-planar-girth6");

    v = classify_monogenic(cycle(6));
    CHECK(v.branch == "cycle length>=6");
    CHECK(v.theorem == "hardness-cobipartite");

    v = classify_monogenic(disjoint_union(path(3), empty_graph(1)));
    CHECK(v.verdict == Verdict::np_hard);
    CHECK(v.branch == "two-paths (3,1)");

    CHECK_THROWS_AS(classify_monogenic(empty_graph(0)), PreconditionError);
}

TEST_CASE("the eleven four-vertex graphs are consistent") {
    const std::vector<Graph> all4 = {
        complete(4), cycle(4), p4(), claw(), paw(), diamond(), two_k2(),
        disjoint_union(complete(3), empty_graph(1)),
        disjoint_union(path(3), empty_graph(1)), empty_graph(4),
        disjoint_union(path(2), empty_graph(2))};
    REQUIRE(all4.size() == 11);
    int poly = 0;
    for (const Graph& h : all4) {
        CHECK(dichotomy_consistency(h));
        if (classify_monogenic(h).verdict == Verdict::polynomial_time) ++poly;
    }
    CHECK(poly == 2);  // exactly P4 and 2K2
}

TEST_CASE("tree and headline agree on all small graphs") {
    for (int n = 1; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& h) { CHECK(dichotomy_consistency(h)); });
}
