// Benchmark of the upper domination oracles: the plain subset-filter
// reference, the pruned search kernel, and its OpenMP split, plus a
// batch sweep over all 6-vertex graphs run serially and in parallel.
//
//   ./updom_bench [max_reference_n]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "updom/constructions.hpp"
#include "updom/corpora.hpp"
#include "updom/domination.hpp"
#include "updom/families.hpp"

using namespace updom;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_single(const char* label, const Graph& g, bool run_reference) {
    std::printf("%-24s n=%2d m=%3d\n", label, g.n(), g.m());

    double ref_time = -1;
    if (run_reference) {
        auto t0 = Clock::now();
        auto r = ref::brute_Gamma(g, 63);
        ref_time = seconds_since(t0);
        std::printf("  reference subset filter %9.3fs  Gamma=%d\n", ref_time, r.value);
    }

    auto t1 = Clock::now();
    auto serial = brute_Gamma(g, 63);
    double serial_time = seconds_since(t1);
    if (ref_time >= 0)
        std::printf("  pruned kernel (serial)  %9.3fs  Gamma=%d  (%.0fx vs reference)\n",
                    serial_time, serial.value, ref_time / std::max(serial_time, 1e-9));
    else
        std::printf("  pruned kernel (serial)  %9.3fs  Gamma=%d\n", serial_time, serial.value);

    auto t2 = Clock::now();
    auto parallel = brute_Gamma_parallel(g, 63);
    double parallel_time = seconds_since(t2);
    std::printf("  pruned kernel (OpenMP)  %9.3fs  Gamma=%d  (%.2fx vs serial)\n", parallel_time,
                parallel.value, serial_time / std::max(parallel_time, 1e-9));

    if (serial.value != parallel.value || !(serial.witness == parallel.witness))
        std::printf("  MISMATCH between serial and parallel kernels!\n");
}

void bench_sweep() {
    const long long total = labeled_graph_count(6);
    std::printf("batch: Gamma over all %lld labeled 6-vertex graphs\n", total);

    std::vector<int> serial_out(total), parallel_out(total);
    auto t0 = Clock::now();
    for (long long mask = 0; mask < total; ++mask)
        serial_out[mask] = brute_Gamma(graph_from_edge_mask(6, mask)).value;
    double serial_time = seconds_since(t0);
    std::printf("  serial loop             %9.3fs\n", serial_time);

    auto t1 = Clock::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (long long mask = 0; mask < total; ++mask)
        parallel_out[mask] = brute_Gamma(graph_from_edge_mask(6, mask)).value;
    double parallel_time = seconds_since(t1);
    std::printf("  OpenMP loop             %9.3fs  (%.2fx)\n", parallel_time,
                serial_time / std::max(parallel_time, 1e-9));

    if (serial_out != parallel_out) std::printf("  MISMATCH in sweep results!\n");
}

}  // namespace

int main(int argc, char** argv) {
    int max_ref_n = argc > 1 ? std::atoi(argv[1]) : 20;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif

    Rng rng(2024);
    Graph g18 = random_graph(18, 0.25, rng);
    Graph g20 = random_graph(20, 0.20, rng);
    Graph q_of_dense = q_construct(random_graph(6, 0.5, rng)).graph;
    Graph gadget_of_c4 = gadget_construct(cycle(4)).graph;

    Rng heavy(5);
    Graph g34 = random_graph(34, 0.20, heavy);
    Graph g36 = random_graph(36, 0.25, heavy);
    Graph g40 = random_graph(40, 0.20, heavy);
    Graph triangles = complete(3);
    for (int i = 1; i < 13; ++i) triangles = disjoint_union(triangles, complete(3));

    bench_single("random G(18,.25)", g18, 18 <= max_ref_n);
    bench_single("random G(20,.20)", g20, 20 <= max_ref_n);
    bench_single("Q(random G(6,.5))", q_of_dense, q_of_dense.n() <= max_ref_n);
    bench_single("gadget(C4)", gadget_of_c4, gadget_of_c4.n() <= max_ref_n);
    bench_single("random G(34,.20)", g34, false);
    bench_single("random G(36,.25)", g36, false);
    bench_single("random G(40,.20)", g40, false);
    bench_single("13 disjoint triangles", triangles, false);
    bench_sweep();
    return 0;
}
