#include <benchmark/benchmark.h>

#include "logverlinde/fusion.hpp"
#include "logverlinde/hopf.hpp"
#include "logverlinde/linalg.hpp"
#include "logverlinde/modular.hpp"

using namespace verlinde;

static void BM_FusionClosure(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_wp_fusion_table(p));
}
BENCHMARK(BM_FusionClosure)->Arg(2)->Arg(4)->Arg(6);

static void BM_Associativity(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    FusionTable t = build_wp_fusion_table(p);
    for (auto _ : state) benchmark::DoNotOptimize(t.associative());
}
BENCHMARK(BM_Associativity)->Arg(4)->Arg(6);

static void BM_RepProperty(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    FusionTable t = build_wp_fusion_table(p);
    for (auto _ : state) benchmark::DoNotOptimize(check_rep_property(t, wp_projective(+1, 1), p));
}
BENCHMARK(BM_RepProperty)->Arg(3)->Arg(5);

static void BM_BlockDiagonalize(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    FusionTable t = build_wp_fusion_table(p);
    auto J = ExactMatrix::from_int(t.fusion_matrix(wp_simple(-1, 1)), p);
    auto Y = ExactMatrix::from_int(t.fusion_matrix(wp_simple(+1, 2)), p);
    for (auto _ : state) benchmark::DoNotOptimize(block_diagonalize_pair(J, Y, p));
}
BENCHMARK(BM_BlockDiagonalize)->Arg(3)->Arg(5);

static void BM_Eta(benchmark::State& state) {
    Tau tau{0.3, 1.7};
    for (auto _ : state) benchmark::DoNotOptimize(eta(tau, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Eta)->Arg(400)->Arg(1600);

static void BM_AssembleSchi(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(assemble_schi(p));
}
BENCHMARK(BM_AssembleSchi)->Arg(3)->Arg(5);

static void BM_RatioIdentity(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_ratio_identity(p));
}
BENCHMARK(BM_RatioIdentity)->Arg(3)->Arg(4);

static void BM_VerlindeProjective(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long acc = 0;
        for (int j = 0; j <= p; ++j)
            for (int k = 0; k <= p; ++k) acc += verlinde_projective(2, j, k, p);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_VerlindeProjective)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
