#include <benchmark/benchmark.h>

#include "girthguard/corpus.hpp"
#include "girthguard/domination.hpp"
#include "girthguard/generators.hpp"
#include "girthguard/partition.hpp"

namespace gg = girthguard;

namespace {

void BM_GirthMcGee(benchmark::State& state) {
    gg::Graph g = gg::gen_cage(gg::CageName::McGee);
    for (auto _ : state) benchmark::DoNotOptimize(gg::girth(g));
}
BENCHMARK(BM_GirthMcGee);

void BM_GirthRandom(benchmark::State& state) {
    gg::Graph g = gg::gen_random_girth(static_cast<int>(state.range(0)), 7, 42);
    for (auto _ : state) benchmark::DoNotOptimize(gg::girth(g));
}
BENCHMARK(BM_GirthRandom)->Arg(50)->Arg(200);

void BM_GammaExactMcGee(benchmark::State& state) {
    gg::Graph g = gg::gen_cage(gg::CageName::McGee);
    for (auto _ : state) benchmark::DoNotOptimize(gg::gamma_exact(g));
}
BENCHMARK(BM_GammaExactMcGee);

void BM_GammaBruteC14(benchmark::State& state) {
    gg::Graph g = gg::gen_cycle(14);
    for (auto _ : state) benchmark::DoNotOptimize(gg::gamma_brute(g));
}
BENCHMARK(BM_GammaBruteC14);

void BM_BuildPartitionC30(benchmark::State& state) {
    gg::Graph g = gg::gen_cycle(30);
    auto cert = gg::gamma_exact(g);
    for (auto _ : state) benchmark::DoNotOptimize(gg::build_partition(g, cert.members));
}
BENCHMARK(BM_BuildPartitionC30);

void BM_GenRandomGirth(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(gg::gen_random_girth(static_cast<int>(state.range(0)), 7, 1));
}
BENCHMARK(BM_GenRandomGirth)->Arg(30)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
