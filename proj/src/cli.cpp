#include "updom/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "updom/algo2k2.hpp"
#include "updom/constructions.hpp"
#include "updom/corpora.hpp"
#include "updom/dichotomy.hpp"
#include "updom/families.hpp"
#include "updom/graph6.hpp"
#include "updom/recognition.hpp"
#include "updom/sweeps.hpp"

namespace updom {

namespace {

using json = nlohmann::ordered_json;

json to_json(const VertexSet& s) { return json(s.to_vector()); }

struct InputOptions {
    std::string path;
    std::string inline_g6;
    std::string format = "auto";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "instance file, or - for standard input");
    cmd->add_option("--g6", in.inline_g6, "inline graph6 string instead of a file");
    cmd->add_option("--format", in.format, "input format: auto, g6, edgelist")
        ->check(CLI::IsMember({"auto", "g6", "edgelist"}));
}

Graph load_graph(const InputOptions& in) {
    std::string text;
    if (!in.inline_g6.empty()) {
        text = in.inline_g6;
    } else if (in.path.empty()) {
        throw PreconditionError("no input given (pass a file, -, or --g6)");
    } else if (in.path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(in.path);
        if (!f) throw PreconditionError("cannot open input file: " + in.path);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    GraphFormat fmt = GraphFormat::autodetect;
    if (in.format == "g6" || !in.inline_g6.empty()) fmt = GraphFormat::graph6;
    if (in.format == "edgelist") fmt = GraphFormat::edge_list;
    return parse_graph(text, fmt);
}

void emit(std::ostream& out, const json& j, bool pretty) {
    if (pretty)
        out << j.dump(2) << '\n';
    else
        out << j.dump() << '\n';
}

json lift_json(const LiftCheck& lift) {
    return json{{"size", lift.size}, {"verified", lift.verified}};
}

json verdict_json(const Graph& h, const ClassVerdict& v) {
    json j;
    j["verdict"] = v.verdict == Verdict::polynomial_time ? "PolynomialTime" : "NPHard";
    j["case"] = v.branch;
    j["theorem"] = v.theorem;
    json w;
    if (!v.cycle.empty()) w["cycle"] = v.cycle;
    if (!v.claw_embedding.empty()) w["claw_embedding"] = v.claw_embedding;
    if (!v.component_sizes.empty()) w["component_sizes"] = v.component_sizes;
    if (v.k > 0) {
        w["k"] = v.k;
        w["t"] = v.t;
    }
    if (!v.poly_host.empty()) {
        w["host"] = v.poly_host;
        w["embedding"] = v.poly_embedding;
    }
    j["witness"] = w;
    j["n"] = h.n();
    j["m"] = h.m();
    return j;
}

json sweep_json(const SweepReport& r, uint64_t seed, int cap) {
    json j;
    j["suite"] = r.name;
    j["seed"] = seed;
    j["cap"] = cap;
    j["checked"] = r.checked;
    j["failed"] = r.failed;
    j["ok"] = r.ok();
    j["notes"] = r.notes;
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"updom: exact algorithms, reductions and recognizers for upper domination"};
    app.require_subcommand(1);

    int cap = default_brute_cap();
    uint64_t seed = 1;
    int threads = 0;
    bool pretty = false;
    app.add_option("--cap", cap, "brute-force vertex cap (UPDOM_MAX_N overrides the default)");
    app.add_option("--seed", seed, "seed for randomized corpora");
    app.add_option("--threads", threads, "worker threads (0 = library default)");
    app.add_flag("--pretty", pretty, "indent JSON output");

    // solve
    auto* solve = app.add_subcommand("solve", "upper dominating set of one instance");
    InputOptions solve_in;
    add_input_options(solve, solve_in);
    std::string method = "auto";
    solve->add_option("--method", method, "auto, brute, or 2k2")
        ->check(CLI::IsMember({"auto", "brute", "2k2"}));

    // invariants
    auto* inv = app.add_subcommand("invariants", "alpha, gamma, Gamma, girth, degree");
    InputOptions inv_in;
    add_input_options(inv, inv_in);

    // construct
    auto* cons = app.add_subcommand("construct", "build gadget/Q/subdivision/tripod/H_n graphs");
    InputOptions cons_in;
    std::string cons_kind;
    cons->add_option("kind", cons_kind, "gadget, q, subdivide, tripod, hgraph")
        ->required()
        ->check(CLI::IsMember({"gadget", "q", "subdivide", "tripod", "hgraph"}));
    add_input_options(cons, cons_in);
    std::vector<int> arms{1, 1, 1};
    int hn = 1;
    std::string hconv = "internal";
    bool cons_json = false;
    cons->add_option("--arms", arms, "tripod arm lengths i j l")->expected(3);
    cons->add_option("--n", hn, "H_n index");
    cons->add_option("--h-convention", hconv, "internal or path-edges")
        ->check(CLI::IsMember({"internal", "path-edges"}));
    cons->add_flag("--json", cons_json, "emit JSON with provenance instead of bare graph6");

    // certify
    auto* cert = app.add_subcommand("certify", "check a reduction identity by brute force");
    InputOptions cert_in;
    std::string cert_kind;
    cert->add_option("kind", cert_kind, "q or gadget")
        ->required()
        ->check(CLI::IsMember({"q", "gadget"}));
    add_input_options(cert, cert_in);

    // recognize
    auto* rec = app.add_subcommand("recognize", "hereditary class membership");
    InputOptions rec_in;
    std::string rec_class;
    int zk_k = 3;
    std::string rec_hconv = "internal";
    rec->add_option("class", rec_class, "2k2-free, co-bipartite, qstar, tripod-forest, zk")
        ->required()
        ->check(CLI::IsMember({"2k2-free", "co-bipartite", "qstar", "tripod-forest", "zk"}));
    add_input_options(rec, rec_in);
    rec->add_option("--k", zk_k, "index for zk membership");
    rec->add_option("--h-convention", rec_hconv, "internal or path-edges")
        ->check(CLI::IsMember({"internal", "path-edges"}));

    // classify
    auto* cls = app.add_subcommand("classify", "dichotomy verdict for H-free graphs");
    InputOptions cls_in;
    add_input_options(cls, cls_in);

    // sweep
    auto* sw = app.add_subcommand("sweep", "exhaustive/random verification suites");
    std::string suite;
    int sweep_max_n = -1;
    int sweep_count = -1;
    int sweep_max_m = 4;
    sw->add_option("suite", suite, "which suite to run")
        ->required()
        ->check(CLI::IsMember({"2k2-oracle", "q-identity", "gadget-identity", "qstar",
                               "forbidden-set", "triangle-corollary", "normalization",
                               "structural", "dichotomy", "all"}));
    sw->add_option("--max-n", sweep_max_n, "largest exhaustive vertex count");
    sw->add_option("--count", sweep_count, "random corpus size");
    sw->add_option("--max-m", sweep_max_m, "edge bound for the gadget suite");

    try {
        std::vector<const char*> argv;
        argv.push_back("updom");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "updom: " << e.what() << '\n';
        return 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (*solve) {
            Graph g = load_graph(solve_in);
            json j;
            if (method == "auto") method = is_2k2_free(g) ? "2k2" : "brute";
            if (method == "2k2") {
                auto sol = upper_dominating_2k2(g);
                j["size"] = sol.set.size();
                j["method"] = sol.method == SolveMethod::triangle ? "triangle" : "independent-set";
                j["witness"] = to_json(sol.set);
            } else {
                auto sol = brute_Gamma(g, cap);
                j["size"] = sol.value;
                j["method"] = "brute";
                j["witness"] = to_json(sol.witness);
            }
            j["n"] = g.n();
            j["m"] = g.m();
            j["cap"] = cap;
            emit(out, j, pretty);
        } else if (*inv) {
            Graph g = load_graph(inv_in);
            InvariantReport r = invariants(g, cap);
            json j;
            j["n"] = g.n();
            j["m"] = g.m();
            j["alpha"] = r.alpha;
            j["gamma"] = r.gamma_lower;
            j["Gamma"] = r.gamma_upper;
            j["max_degree"] = max_degree(g);
            auto gi = girth(g);
            j["girth"] = gi ? json(*gi) : json("infinite");
            j["witnesses"] = {{"alpha", to_json(r.alpha_witness)},
                              {"gamma", to_json(r.gamma_witness)},
                              {"Gamma", to_json(r.Gamma_witness)}};
            j["cap"] = cap;
            emit(out, j, pretty);
        } else if (*cons) {
            json j;
            j["construction"] = cons_kind;
            Graph result;
            if (cons_kind == "tripod") {
                result = tripod(arms[0], arms[1], arms[2]);
                j["arms"] = arms;
            } else if (cons_kind == "hgraph") {
                HConvention conv = hconv == "internal" ? HConvention::internal_vertices
                                                       : HConvention::path_edges;
                result = h_graph(hn, conv);
                j["index"] = hn;
                j["convention"] = hconv;
            } else {
                Graph g = load_graph(cons_in);
                j["base_n"] = g.n();
                j["base_m"] = g.m();
                if (cons_kind == "gadget") {
                    GadgetGraph gg = gadget_construct(g);
                    result = gg.graph;
                    json gadgets = json::array();
                    for (const auto& e : gg.gadgets)
                        gadgets.push_back({{"u", e.u},
                                           {"v", e.v},
                                           {"ve", e.ve},
                                           {"ue", e.ue},
                                           {"vpe", e.vpe},
                                           {"upe", e.upe}});
                    j["gadgets"] = gadgets;
                } else if (cons_kind == "q") {
                    QGraph q = q_construct(g);
                    result = q.graph;
                    json edges = json::array();
                    for (const auto& [u, v] : q.edge_of_new) edges.push_back({u, v});
                    j["edge_of_new"] = edges;
                } else {
                    Subdivision s = subdivide(g);
                    result = s.graph;
                    json edges = json::array();
                    for (const auto& [u, v] : s.edge_of_new) edges.push_back({u, v});
                    j["edge_of_new"] = edges;
                }
            }
            if (cons_json) {
                j["n"] = result.n();
                j["m"] = result.m();
                j["g6"] = graph6_encode(result);
                emit(out, j, pretty);
            } else {
                out << graph6_encode(result) << '\n';
            }
        } else if (*cert) {
            Graph g = load_graph(cert_in);
            json j;
            j["construction"] = cert_kind;
            j["n"] = g.n();
            j["m"] = g.m();
            if (cert_kind == "q") {
                QCertificate c = certify_q_identity(g, cap);
                j["gamma"] = c.gamma;
                j["Gamma_Q"] = c.gamma_q;
                j["identity"] = !c.precondition_met ? "precondition-not-met"
                                : c.identity_holds  ? "holds"
                                                    : "fails";
                j["precondition"] = c.precondition_met ? "met" : "not-met";
                j["forward"] = lift_json(c.forward);
                j["backward"] = c.backward_ran ? lift_json(c.backward) : json(nullptr);
                j["witnesses"] = {{"gamma", to_json(c.gamma_witness)},
                                  {"Gamma_Q", to_json(c.gamma_q_witness)}};
            } else {
                GadgetCertificate c = certify_gadget_identity(g, cap);
                j["alpha"] = c.alpha;
                j["Gamma_gadget"] = c.gamma_gadget;
                j["identity"] = c.identity_holds ? "holds" : "fails";
                j["forward"] = lift_json(c.forward);
                j["backward"] = lift_json(c.backward);
                j["witnesses"] = {{"alpha", to_json(c.alpha_witness)},
                                  {"Gamma_gadget", to_json(c.gadget_witness)}};
            }
            j["cap"] = cap;
            emit(out, j, pretty);
        } else if (*rec) {
            Graph g = load_graph(rec_in);
            json j;
            j["class"] = rec_class;
            if (rec_class == "2k2-free") {
                auto w = find_induced_2k2(g);
                j["member"] = !w.has_value();
                if (w) j["witness"] = std::vector<int>(w->begin(), w->end());
            } else if (rec_class == "co-bipartite") {
                auto cliques = is_cobipartite(g);
                j["member"] = cliques.has_value();
                if (cliques)
                    j["cliques"] = {to_json((*cliques)[0]), to_json((*cliques)[1])};
            } else if (rec_class == "qstar") {
                bool by_partition = in_q_star(g, QStarMethod::partition);
                bool by_forbidden = in_q_star(g, QStarMethod::forbidden);
                j["member"] = by_partition;
                j["method_partition"] = by_partition;
                j["method_forbidden"] = by_forbidden;
                j["agree"] = by_partition == by_forbidden;
                if (auto p = find_nice_partition(g))
                    j["partition"] = {{"U", to_json(p->u)}, {"W", to_json(p->w)}};
                if (auto w = find_induced(g, forbidden_set_n_graphs()))
                    j["forbidden_witness"] = {{"pattern", forbidden_set_n()[w->pattern_index].name},
                                              {"embedding", w->embedding}};
            } else if (rec_class == "tripod-forest") {
                ClassSResult r = in_class_S(g);
                j["member"] = r.member;
                json comps = json::array();
                for (const auto& c : r.components) {
                    json cj;
                    cj["vertices"] = to_json(c.vertices);
                    cj["tripod"] = c.tripod;
                    if (c.tripod) cj["arms"] = c.arms;
                    comps.push_back(cj);
                }
                j["components"] = comps;
            } else {  // zk
                HConvention conv = rec_hconv == "internal" ? HConvention::internal_vertices
                                                           : HConvention::path_edges;
                ZkResult r = in_Z_k(g, zk_k, conv);
                j["k"] = zk_k;
                j["member"] = r.member;
                if (!r.member) {
                    j["reason"] = r.reason;
                    if (!r.witness.empty()) j["witness"] = r.witness;
                }
            }
            emit(out, j, pretty);
        } else if (*cls) {
            Graph g = load_graph(cls_in);
            emit(out, verdict_json(g, classify_monogenic(g)), pretty);
        } else if (*sw) {
            auto run_suite = [&](const std::string& name) -> SweepReport {
                auto n_or = [&](int d) { return sweep_max_n > 0 ? sweep_max_n : d; };
                auto c_or = [&](int d) { return sweep_count > 0 ? sweep_count : d; };
                if (name == "2k2-oracle")
                    return sweep_2k2_oracle(n_or(6), c_or(200), 7, 12, seed, cap);
                if (name == "q-identity") return sweep_q_identity(4, n_or(6), cap);
                if (name == "gadget-identity")
                    return sweep_gadget_identity(n_or(5), sweep_max_m, cap);
                if (name == "qstar")
                    return sweep_qstar_agreement(n_or(6), c_or(1000), 7, 9, seed);
                if (name == "forbidden-set") return sweep_forbidden_set_self_tests();
                if (name == "triangle-corollary") return sweep_triangle_corollary(n_or(6), cap);
                if (name == "normalization") return sweep_normalization(c_or(500), n_or(14), seed);
                if (name == "structural")
                    return sweep_structural(c_or(100), std::max(1, c_or(100) / 2), seed);
                return sweep_dichotomy(n_or(5));
            };
            if (suite == "all") {
                const std::vector<std::string> names = {
                    "2k2-oracle",   "q-identity",         "gadget-identity",
                    "qstar",        "forbidden-set",      "triangle-corollary",
                    "normalization", "structural",        "dichotomy"};
                json suites = json::array();
                bool ok = true;
                for (const auto& name : names) {
                    SweepReport r = run_suite(name);
                    ok = ok && r.ok();
                    suites.push_back(sweep_json(r, seed, cap));
                }
                json j;
                j["suites"] = suites;
                j["ok"] = ok;
                emit(out, j, pretty);
                if (!ok) return 1;
            } else {
                SweepReport r = run_suite(suite);
                emit(out, sweep_json(r, seed, cap), pretty);
                if (!r.ok()) return 1;
            }
        }
        return 0;
    } catch (const TwoK2Error& e) {
        json j;
        j["error"] = "precondition";
        j["detail"] = e.what();
        j["witness"] = std::vector<int>(e.witness().begin(), e.witness().end());
        emit(out, j, pretty);
        err << "updom: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        json j;
        j["error"] = "precondition";
        j["detail"] = e.what();
        emit(out, j, pretty);
        err << "updom: " << e.what() << '\n';
        return 2;
    } catch (const InvariantError& e) {
        json j;
        j["error"] = "invariant";
        j["detail"] = e.what();
        emit(out, j, pretty);
        err << "updom: internal invariant breach: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "updom: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace updom
