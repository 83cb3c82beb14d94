#include <benchmark/benchmark.h>

#include "tdmtw/exact_kfree.hpp"
#include "tdmtw/grids.hpp"
#include "tdmtw/heuristic.hpp"
#include "tdmtw/ip_solver.hpp"
#include "tdmtw/transform.hpp"

#include <random>

using namespace tdm;

namespace {

IPInstance random_instance(int n, int m, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> col(0, n - 1);
    std::uniform_int_distribution<int> mag(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> small(-3, 3);
    TwoNonzeroMatrix a(m, n);
    for (int i = 0; i < m; ++i) {
        int ca = col(rng);
        int cb = col(rng);
        if (cb == ca) cb = (cb + 1) % n;
        auto coef = [&] { return sign(rng) ? mag(rng) : -mag(rng); };
        a.set_row(i, ca, coef(), cb, coef());
    }
    std::vector<Int> w, lo, hi, b;
    for (int j = 0; j < n; ++j) {
        int l = small(rng);
        lo.push_back(l);
        hi.push_back(l + 3);
        w.push_back(small(rng));
    }
    for (int i = 0; i < m; ++i) b.push_back(small(rng) + 6);
    return IPInstance{std::move(a), std::move(b), std::move(w), std::move(lo), std::move(hi)};
}

}  // namespace

static void BM_MaxAbsSubdeterminant(benchmark::State& state) {
    IPInstance inst = random_instance(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(max_abs_subdeterminant(inst.a));
}
BENCHMARK(BM_MaxAbsSubdeterminant)->Arg(4)->Arg(6)->Arg(8);

static void BM_SolveDP(benchmark::State& state) {
    IPInstance inst = random_instance(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(0)) + 4, 13);
    RootedSignedGraph g = to_rooted_signed_graph(inst.a);
    KFreeDecomposition kfree = extract_from_tdm(g, decompose_heuristic(g).decomposition).first;
    for (auto _ : state) benchmark::DoNotOptimize(solve_dp(inst, kfree));
}
BENCHMARK(BM_SolveDP)->Arg(6)->Arg(8)->Arg(10);

static void BM_BruteForceOracle(benchmark::State& state) {
    IPInstance inst = random_instance(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(0)) + 4, 13);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(inst));
}
BENCHMARK(BM_BruteForceOracle)->Arg(6)->Arg(8);

static void BM_ExactKFreeTreewidth(benchmark::State& state) {
    GridGraph w = make_rooted_grid(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_kfree_tw(w.graph, w.graph.roots()));
}
BENCHMARK(BM_ExactKFreeTreewidth)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
