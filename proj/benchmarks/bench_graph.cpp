#include <benchmark/benchmark.h>

#include "tdmtw/grids.hpp"
#include "tdmtw/heuristic.hpp"
#include "tdmtw/ocp.hpp"

#include <random>

using namespace tdm;

namespace {

RootedSignedGraph random_signed(int n, int m, unsigned seed) {
    std::mt19937 rng(seed);
    RootedSignedGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int e = 0; e < m; ++e) {
        int u = pick(rng);
        int v = pick(rng);
        if (u == v) v = (v + 1) % n;
        g.add_edge(e, u, v, bit(rng));
    }
    return g;
}

}  // namespace

static void BM_OcpExact(benchmark::State& state) {
    RootedSignedGraph g = random_signed(static_cast<int>(state.range(0)),
                                        static_cast<int>(2 * state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(ocp_exact(g));
}
BENCHMARK(BM_OcpExact)->Arg(8)->Arg(12)->Arg(16);

static void BM_EvenGridSubdivision(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    GridGraph base = make_grid(k * k);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> bit(0, 1);
    RootedSignedGraph host;
    for (int v : base.graph.vertices()) host.add_vertex(v);
    for (const auto& [id, e] : base.graph.edges()) host.add_edge(id, e.u, e.v, bit(rng));
    for (auto _ : state) benchmark::DoNotOptimize(find_even_grid_subdivision(host, k));
}
BENCHMARK(BM_EvenGridSubdivision)->Arg(2)->Arg(3)->Arg(4);

static void BM_HeuristicDecomposition(benchmark::State& state) {
    GridGraph handle = make_parity_handle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_heuristic(handle.graph));
}
BENCHMARK(BM_HeuristicDecomposition)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
