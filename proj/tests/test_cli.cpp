#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "updom/cli.hpp"
#include "updom/families.hpp"
#include "updom/graph6.hpp"

using namespace updom;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve on the prism reports the triangle solution") {
    std::string prism_g6 = graph6_encode(prism());
    auto r = run({"solve", "--method", "2k2", "--g6", prism_g6});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"size\":3,\"method\":\"triangle\",\"witness\":[0,1,2],\"n\":6,\"m\":9,\"cap\":24}\n");

    // byte determinism
    auto again = run({"solve", "--method", "2k2", "--g6", prism_g6});
    CHECK(again.out == r.out);
}

TEST_CASE("solve rejects non-2k2-free input with a witness") {
    auto r = run({"solve", "--method", "2k2", "--g6", graph6_encode(cycle(6))});
    CHECK(r.code == 2);
    CHECK(r.out.find("\"error\":\"precondition\"") != std::string::npos);
    CHECK(r.out.find("\"witness\":[0,1,3,4]") != std::string::npos);
}

TEST_CASE("brute solve respects the cap") {
    auto r = run({"solve", "--method", "brute", "--g6", graph6_encode(path(30))});
    CHECK(r.code == 2);
    CHECK(r.out.find("cap") != std::string::npos);

    auto ok = run({"--cap", "30", "solve", "--method", "brute", "--g6",
                   graph6_encode(path(30))});
    CHECK(ok.code == 0);
}

TEST_CASE("invariants") {
    auto r = run({"invariants", "--g6", graph6_encode(cycle(5))});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"alpha\":2") != std::string::npos);
    CHECK(r.out.find("\"gamma\":2") != std::string::npos);
    CHECK(r.out.find("\"Gamma\":2") != std::string::npos);
    CHECK(r.out.find("\"girth\":5") != std::string::npos);

    auto tree = run({"invariants", "--g6", graph6_encode(path(4))});
    CHECK(tree.out.find("\"girth\":\"infinite\"") != std::string::npos);
}

TEST_CASE("certify q on c6 reports the identity") {
    auto r = run({"certify", "q", "--g6", graph6_encode(cycle(6))});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"gamma\":2") != std::string::npos);
    CHECK(r.out.find("\"Gamma_Q\":4") != std::string::npos);
    CHECK(r.out.find("\"identity\":\"holds\"") != std::string::npos);

    auto guarded = run({"certify", "q", "--g6", graph6_encode(path(3))});
    CHECK(guarded.code == 0);
    CHECK(guarded.out.find("\"identity\":\"precondition-not-met\"") != std::string::npos);
}

TEST_CASE("certify gadget") {
    auto r = run({"certify", "gadget", "--g6", graph6_encode(path(2))});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"alpha\":1") != std::string::npos);
    CHECK(r.out.find("\"Gamma_gadget\":3") != std::string::npos);
    CHECK(r.out.find("\"identity\":\"holds\"") != std::string::npos);
}

TEST_CASE("classify emits the decision-tree case") {
    auto r = run({"classify", "--g6", graph6_encode(path(5))});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\":\"NPHard\"") != std::string::npos);
    CHECK(r.out.find("\"case\":\"two-paths k+t>=5\"") != std::string::npos);

    auto p = run({"classify", "--g6", graph6_encode(two_k2())});
    CHECK(p.out.find("\"verdict\":\"PolynomialTime\"") != std::string::npos);
}

TEST_CASE("recognize") {
    auto r = run({"recognize", "2k2-free", "--g6", graph6_encode(cycle(6))});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"member\":false") != std::string::npos);
    CHECK(r.out.find("\"witness\":[0,1,3,4]") != std::string::npos);

    auto zk = run({"recognize", "zk", "--k", "4", "--g6", graph6_encode(cycle(5))});
    CHECK(zk.out.find("\"member\":true") != std::string::npos);

    auto ts = run({"recognize", "tripod-forest", "--g6", graph6_encode(path(7))});
    CHECK(ts.out.find("\"member\":true") != std::string::npos);
    CHECK(ts.out.find("\"arms\":[3,3,0]") != std::string::npos);
}

TEST_CASE("construct emits graph6 by default and provenance with --json") {
    auto bare = run({"construct", "q", "--g6", graph6_encode(path(2))});
    CHECK(bare.code == 0);
    CHECK(bare.out == graph6_encode(complete(3)) + "\n");

    auto js = run({"construct", "tripod", "--arms", "1", "1", "1", "--json"});
    CHECK(js.code == 0);
    CHECK(js.out.find("\"construction\":\"tripod\"") != std::string::npos);
    CHECK(js.out.find("\"n\":4") != std::string::npos);

    auto hm = run({"construct", "hgraph", "--n", "1"});
    CHECK(hm.code == 0);
    CHECK(hm.out == graph6_encode(parse_graph(hm.out.substr(0, hm.out.size() - 1))) + "\n");
}

TEST_CASE("malformed input names the byte offset") {
    auto r = run({"solve", "--g6", "B"});
    CHECK(r.code == 2);
    CHECK(r.err.find("byte offset") != std::string::npos);

    auto trailing = run({"solve", "--g6", "Bw!"});
    CHECK(trailing.code == 2);
}

TEST_CASE("pretty output is a reindentation of the same JSON") {
    std::string g6 = graph6_encode(cycle(5));
    auto plain = run({"invariants", "--g6", g6});
    auto pretty = run({"--pretty", "invariants", "--g6", g6});
    CHECK(plain.code == 0);
    CHECK(pretty.code == 0);
    std::string squashed;
    for (char ch : pretty.out)
        if (ch != ' ' && ch != '\n') squashed.push_back(ch);
    std::string plain_squashed;
    for (char ch : plain.out)
        if (ch != ' ' && ch != '\n') plain_squashed.push_back(ch);
    CHECK(squashed == plain_squashed);
}

TEST_CASE("sweep runs a small suite") {
    auto r = run({"sweep", "dichotomy", "--max-n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"suite\":\"dichotomy\"") != std::string::npos);
    CHECK(r.out.find("\"failed\":0") != std::string::npos);
    CHECK(r.out.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("sweep output is identical across thread counts") {
    std::vector<std::string> base = {"sweep", "normalization", "--count", "50", "--max-n", "10"};
    auto one = run([&] {
        auto a = base;
        a.insert(a.begin(), {"--threads", "1"});
        return a;
    }());
    auto two = run([&] {
        auto a = base;
        a.insert(a.begin(), {"--threads", "2"});
        return a;
    }());
    CHECK(one.code == 0);
    CHECK(one.out == two.out);
}

TEST_CASE("usage errors refuse with exit code 2") {
    auto r = run({"recognize", "nonsense", "--g6", "Bw"});
    CHECK(r.code == 2);
    auto missing = run({"solve"});
    CHECK(missing.code == 2);
}
