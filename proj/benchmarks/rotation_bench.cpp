#include <benchmark/benchmark.h>

#include "stablematch/da.hpp"
#include "stablematch/poset.hpp"
#include "stablematch/rotations.hpp"

using namespace stablematch;

static void BM_Mpda(benchmark::State& state) {
    int n = (int)state.range(0);
    Instance inst = gen_random(n, n, 1.0, 42);
    for (auto _ : state) benchmark::DoNotOptimize(mpda(inst).matching);
    state.SetComplexityN(n);
}
BENCHMARK(BM_Mpda)->RangeMultiplier(2)->Range(50, 800)->Complexity(benchmark::oNSquared);

static void BM_FindRotationGraph(benchmark::State& state) {
    int n = (int)state.range(0);
    Instance inst = gen_random(n, n, 1.0, 42);
    for (auto _ : state) benchmark::DoNotOptimize(find_rotation_graph(inst).rotations);
    state.SetComplexityN(n);
}
BENCHMARK(BM_FindRotationGraph)
    ->RangeMultiplier(2)
    ->Range(50, 800)
    ->Complexity(benchmark::oNSquared);

static void BM_EnumerateClosedSets(benchmark::State& state) {
    RotationDigraph g = find_rotation_graph(gen_exponential((int)state.range(0)));
    for (auto _ : state) {
        std::uint64_t count = 0;
        enumerate_closed_sets(g, [&](const ClosedSet&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateClosedSets)->DenseRange(4, 16, 4);

BENCHMARK_MAIN();
