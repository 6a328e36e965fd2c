// Serial reference kernels against their OpenMP versions.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "sqroot/generators.hpp"
#include "sqroot/kernel.hpp"
#include "sqroot/mad.hpp"
#include "sqroot/recognizer.hpp"
#include "sqroot/reference.hpp"

namespace {

using namespace sqroot;

Graph sparse_graph(std::size_t n, double avg_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<Edge> edges;
    const auto m = static_cast<std::size_t>(avg_degree * static_cast<double>(n) / 2);
    while (edges.size() < m) {
        const std::size_t a = pick(rng);
        const std::size_t b = pick(rng);
        if (a != b) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return Graph(n, edges);
}

// Many disjoint planar squares, all small enough for the oracle.
Graph square_forest(std::size_t copies) {
    std::vector<Edge> edges;
    std::size_t offset = 0;
    for (std::size_t c = 0; c < copies; ++c) {
        const Graph h = generate_hkt_root(c, {30, 8});
        for (const Edge& e : square(h).edges()) {
            edges.emplace_back(static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset));
        }
        offset += h.vertex_count();
    }
    return Graph(offset, edges);
}

void BM_SquareSerial(benchmark::State& state) {
    const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 4.0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(reference::square(g));
}

void BM_SquareParallel(benchmark::State& state) {
    const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 4.0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(square(g));
}

void BM_RecognizerSerial(benchmark::State& state) {
    const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 6.0, 3);
    for (auto _ : state) benchmark::DoNotOptimize(reference::find_recognizable_edge(g));
}

void BM_RecognizerParallel(benchmark::State& state) {
    const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 6.0, 3);
    for (auto _ : state) benchmark::DoNotOptimize(find_recognizable_edge(g));
}

void BM_MadExhaustiveSerial(benchmark::State& state) {
    const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 3.0, 2);
    for (auto _ : state) benchmark::DoNotOptimize(reference::max_average_degree_exhaustive(g));
}

void BM_MadExhaustiveParallel(benchmark::State& state) {
    const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 3.0, 2);
    for (auto _ : state) benchmark::DoNotOptimize(max_average_degree_exhaustive(g));
}

void BM_ComponentReduce(benchmark::State& state) {
    const LabeledInstance inst{square_forest(64), {}, {}};
    const KernelOptions options{{}, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(component_reduce(inst, options));
}

}  // namespace

BENCHMARK(BM_SquareSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecognizerSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecognizerParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MadExhaustiveSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MadExhaustiveParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComponentReduce)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
