#include <benchmark/benchmark.h>

#include "pcontract/generators.hpp"
#include "pcontract/planarity.hpp"

using namespace pcontract;

static void BM_EmbedGrid(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    Graph g = generate_grid(side, side);
    for (auto _ : state) benchmark::DoNotOptimize(embed(g));
    state.SetComplexityN(static_cast<int64_t>(g.vertex_count()));
}
BENCHMARK(BM_EmbedGrid)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_KuratowskiWall(benchmark::State& state) {
    WallInstance wi = generate_wall_plus_apex(static_cast<int>(state.range(0)), {{{2, 2}, {2, 3}, {3, 3}, {4, 6}, {5, 2}}});
    for (auto _ : state) benchmark::DoNotOptimize(test_planarity(wi.graph));
}
BENCHMARK(BM_KuratowskiWall)->Arg(6)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
