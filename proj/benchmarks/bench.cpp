#include <benchmark/benchmark.h>

#include "oriray/arrows.hpp"
#include "oriray/bounds.hpp"
#include "oriray/catalog.hpp"
#include "oriray/constructions.hpp"
#include "oriray/embedder.hpp"
#include "oriray/rng.hpp"

using namespace oriray;

static void BM_DistanceMatrix(benchmark::State& state) {
    SplitMix64 rng(1);
    Graph g = random_connected_graph(int(state.range(0)), 0.05, rng);
    for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(g));
}
BENCHMARK(BM_DistanceMatrix)->Arg(50)->Arg(200);

static void BM_CanonicalGraph(benchmark::State& state) {
    SplitMix64 rng(2);
    Graph g = random_graph(int(state.range(0)), 0.5, rng);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalGraph)->Arg(7)->Arg(9);

static void BM_CanonicalDigraph(benchmark::State& state) {
    auto trees = enumerate_oriented_trees(int(state.range(0)));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(trees[i % trees.size()]));
        ++i;
    }
}
BENCHMARK(BM_CanonicalDigraph)->Arg(6)->Arg(7);

static void BM_OrientationStream(benchmark::State& state) {
    Graph g = rectangular_product(complete_graph(2), complete_graph(3)); // 9 edges
    for (auto _ : state) {
        uint64_t seen = 0;
        enumerate_orientations(g, [&](const Orientation&) {
            ++seen;
            return true;
        });
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(BM_OrientationStream);

static void BM_ArrowCheckPrism(benchmark::State& state) {
    Graph pr = rectangular_product(complete_graph(2), complete_graph(3));
    auto family = enumerate_oriented_trees(3);
    for (auto _ : state) benchmark::DoNotOptimize(arrow_check(pr, family, Variant::isometric));
}
BENCHMARK(BM_ArrowCheckPrism);

static void BM_FindEmbedding(benchmark::State& state) {
    SplitMix64 rng(3);
    Graph g = random_graph(10, 0.5, rng);
    Orientation o = random_orientation(g, rng);
    Digraph i3 = directed_path(3);
    for (auto _ : state) benchmark::DoNotOptimize(find_embedding(i3, o, Variant::isometric));
}
BENCHMARK(BM_FindEmbedding);

static void BM_PigeonholeEmbed(benchmark::State& state) {
    Graph c5 = cycle_graph(5);
    Graph host_g = rectangular_product(c5, complete_graph(6));
    SplitMix64 rng(4);
    Orientation host = random_orientation(host_g, rng);
    Digraph i4 = directed_path(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(pigeonhole_embed(c5, 6, exhaustive_sub_embedder(), host, i4));
}
BENCHMARK(BM_PigeonholeEmbed);

static void BM_GreedyEmbed(benchmark::State& state) {
    SplitMix64 rng(5);
    Graph g = random_graph(14, 0.5, rng);
    Orientation o = random_orientation(g, rng);
    auto trees = enumerate_oriented_trees(4);
    PikhParameters params{4, {1, 1, 1}, {0.5, 0.5, 0.5}, EmbedMode::isometric};
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_tree_embed(o, trees[i % trees.size()], params));
        ++i;
    }
}
BENCHMARK(BM_GreedyEmbed);

static void BM_MinimizeK(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(minimize_k());
}
BENCHMARK(BM_MinimizeK);

static void BM_TransitiveOrientation(benchmark::State& state) {
    Graph pr = rectangular_product(complete_graph(2), complete_graph(3));
    for (auto _ : state) benchmark::DoNotOptimize(transitive_orientation(pr));
}
BENCHMARK(BM_TransitiveOrientation);

BENCHMARK_MAIN();
