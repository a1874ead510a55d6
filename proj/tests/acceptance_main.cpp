// Acceptance suite: runs every headline claim of the library at full corpus
// size and prints one PASS/FAIL line per criterion. Exit code is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "updom/sweeps.hpp"

using namespace updom;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<SweepReport()> run;
};

}  // namespace

int main() {
    const uint64_t seed = 1;
    const int cap = default_brute_cap();

    const std::vector<Criterion> criteria = {
        {"2k2-algorithm-oracle-equivalence", 120.0,
         [&] { return sweep_2k2_oracle(6, 200, 7, 12, seed, cap); }},
        {"q-graph-identity", 300.0, [&] { return sweep_q_identity(4, 6, cap); }},
        {"gadget-identity", 300.0, [&] { return sweep_gadget_identity(5, 4, cap); }},
        {"qstar-characterization-agreement", 300.0,
         [&] {
             SweepReport a = sweep_qstar_agreement(6, 1000, 7, 9, seed);
             SweepReport b = sweep_forbidden_set_self_tests();
             a.checked += b.checked;
             a.failed += b.failed;
             a.notes.insert(a.notes.end(), b.notes.begin(), b.notes.end());
             return a;
         }},
        {"triangle-corollary-structure", 120.0, [&] { return sweep_triangle_corollary(6, cap); }},
        {"normalization-postconditions", 60.0, [&] { return sweep_normalization(500, 14, seed); }},
        {"structural-girth-and-gadget-bounds", 60.0,
         [&] { return sweep_structural(100, 50, seed); }},
        {"monogenic-dichotomy-table", 30.0, [&] { return sweep_dichotomy(5); }},
    };

    int failed_criteria = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        SweepReport report;
        std::string error;
        try {
            report = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        bool in_budget = seconds <= c.budget_seconds;
        bool pass = error.empty() && report.ok() && in_budget;
        if (!pass) ++failed_criteria;

        std::printf("[%zu/%zu] %-36s %s  (%lld checked, %lld failed, %.1fs of %.0fs)\n", i + 1,
                    criteria.size(), c.name.c_str(), pass ? "PASS" : "FAIL", report.checked,
                    report.failed, seconds, c.budget_seconds);
        if (!error.empty()) std::printf("        error: %s\n", error.c_str());
        if (!in_budget) std::printf("        over budget\n");
        for (const std::string& note : report.notes)
            std::printf("        %s\n", note.c_str());
        std::fflush(stdout);
    }

    if (failed_criteria == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failed_criteria);
    return failed_criteria;
}
