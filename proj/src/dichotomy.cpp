#include "updom/dichotomy.hpp"

#include <algorithm>

#include "updom/families.hpp"

namespace updom {

namespace {

constexpr const char* kHardPlanarGirth = "hardness-planar-girth6";
constexpr const char* kHardCobipartite = "hardness-cobipartite";
constexpr const char* kPoly2K2 = "poly-2k2-algorithm";
constexpr const char* kPolyP4 = "poly-p4-free";

void attach_poly_witness(ClassVerdict& v, const Graph& h, const Graph& host,
                         const std::string& host_name) {
    v.poly_host = host_name;
    auto phi = contains_induced(host, h);
    if (!phi) throw InvariantError("classify_monogenic: polynomial branch without embedding");
    v.poly_embedding = *phi;
}

}  // namespace

ClassVerdict classify_monogenic(const Graph& h) {
    if (h.n() == 0) throw PreconditionError("classify_monogenic: H must be non-empty");
    ClassVerdict v;

    if (auto cyc = girth_cycle(h)) {
        v.cycle = *cyc;
        v.verdict = Verdict::np_hard;
        if (cyc->size() <= 5) {
            v.branch = "cycle length<=5";
            v.theorem = kHardPlanarGirth;
        } else {
            v.branch = "cycle length>=6";
            v.theorem = kHardCobipartite;
        }
        return v;
    }

    if (auto phi = contains_induced(h, claw())) {
        v.verdict = Verdict::np_hard;
        v.branch = "claw";
        v.theorem = kHardCobipartite;
        v.claw_embedding = *phi;
        return v;
    }

    // a claw-free forest is a disjoint union of paths
    if (max_degree(h) > 2)
        throw InvariantError("classify_monogenic: claw-free forest with a degree-3 vertex");
    std::vector<int> sizes;
    for (const VertexSet& comp : connected_components(h)) sizes.push_back(comp.size());
    std::sort(sizes.rbegin(), sizes.rend());

    if (sizes.size() >= 3) {
        v.verdict = Verdict::np_hard;
        v.branch = ">=3 components";
        v.theorem = kHardCobipartite;
        v.component_sizes = sizes;
        return v;
    }

    v.k = sizes[0];
    v.t = sizes.size() == 2 ? sizes[1] : 0;
    const int total = v.k + v.t;
    if (total >= 5) {
        v.verdict = Verdict::np_hard;
        v.branch = "two-paths k+t>=5";
        v.theorem = kHardCobipartite;
    } else if (total <= 3) {
        v.verdict = Verdict::polynomial_time;
        v.branch = "two-paths k+t<=3";
        v.theorem = kPolyP4;
        attach_poly_witness(v, h, p4(), "P4");
    } else if (v.k == 2 && v.t == 2) {
        v.verdict = Verdict::polynomial_time;
        v.branch = "H=2K2";
        v.theorem = kPoly2K2;
        attach_poly_witness(v, h, two_k2(), "2K2");
    } else if (v.k == 4 && v.t == 0) {
        v.verdict = Verdict::polynomial_time;
        v.branch = "H=P4";
        v.theorem = kPolyP4;
        attach_poly_witness(v, h, p4(), "P4");
    } else {  // k = 3, t = 1
        v.verdict = Verdict::np_hard;
        v.branch = "two-paths (3,1)";
        v.theorem = kHardCobipartite;
    }
    return v;
}

bool dichotomy_consistency(const Graph& h) {
    bool tree_poly = classify_monogenic(h).verdict == Verdict::polynomial_time;
    bool headline = contains_induced(two_k2(), h).has_value() ||
                    contains_induced(p4(), h).has_value();
    return tree_poly == headline;
}

}  // namespace updom
