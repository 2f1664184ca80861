#include <benchmark/benchmark.h>

#include "mp/graph.hpp"
#include "mp/homology.hpp"
#include "mp/monomial.hpp"
#include "mp/theorems.hpp"

namespace {

const mp::FieldSpec Q = mp::FieldSpec::rationals();

void BM_MatchingPower(benchmark::State& state) {
    const auto ideal = mp::edge_ideal(mp::complete_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(mp::matching_power(ideal, 2));
}
BENCHMARK(BM_MatchingPower)->DenseRange(6, 12, 2);

void BM_Hochster(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto ideal = mp::matching_power(mp::edge_ideal(mp::cycle_graph(n)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(mp::betti_table_hochster(ideal, Q));
}
BENCHMARK(BM_Hochster)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Koszul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto ideal = mp::edge_ideal(mp::cycle_graph(n));
    for (auto _ : state) benchmark::DoNotOptimize(mp::betti_table_koszul(ideal, Q));
}
BENCHMARK(BM_Koszul)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_HochsterGf2(benchmark::State& state) {
    const auto ideal = mp::matching_power(mp::edge_ideal(mp::cycle_graph(10)), 2);
    const auto field = mp::FieldSpec::prime(2);
    for (auto _ : state) benchmark::DoNotOptimize(mp::betti_table_hochster(ideal, field));
}
BENCHMARK(BM_HochsterGf2)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
    const auto graphs = mp::enumerate_graphs(static_cast<int>(state.range(0)), true);
    for (auto _ : state) {
        for (const auto& g : graphs) benchmark::DoNotOptimize(mp::canonical_form(g));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * graphs.size()));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EnumerateSubsets(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mp::enumerate_graphs_by_subsets(static_cast<int>(state.range(0)), true));
}
BENCHMARK(BM_EnumerateSubsets)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_EnumerateAugmentation(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mp::enumerate_graphs_by_augmentation(static_cast<int>(state.range(0)), true));
    }
}
BENCHMARK(BM_EnumerateAugmentation)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ClassifyGraph(benchmark::State& state) {
    const auto g = mp::vwc_example_graph();
    for (auto _ : state) {
        mp::BettiCache::instance().clear();
        benchmark::DoNotOptimize(mp::classify_graph(g, Q));
    }
}
BENCHMARK(BM_ClassifyGraph)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
