// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "dflag/coboundary.hpp"
#include "dflag/complex_store.hpp"
#include "dflag/enumerate.hpp"
#include "random_graphs.hpp"

namespace {

const dflag::DirectedGraph& bench_graph() {
  static const auto g = dflag::testing::erdos_renyi(1000, 0.01, 7);
  return g;
}

const dflag::DirectedGraph& dense_graph() {
  static const auto g = dflag::testing::erdos_renyi(120, 0.2, 11);
  return g;
}

void BM_CountSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dflag::count_cells_serial(bench_graph(), 5));
}
BENCHMARK(BM_CountSerial)->Unit(benchmark::kMillisecond);

void BM_CountParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dflag::count_cells(bench_graph(), 5, threads));
}
BENCHMARK(BM_CountParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MatrixSerial(benchmark::State& state) {
  const auto store = dflag::build_store(dense_graph(), 3);
  const dflag::PrimeField field(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dflag::build_matrix_serial(store.dimension(2), store.dimension(3), dense_graph(), {}, field));
}
BENCHMARK(BM_MatrixSerial)->Unit(benchmark::kMillisecond);

void BM_MatrixParallel(benchmark::State& state) {
  const auto store = dflag::build_store(dense_graph(), 3);
  const dflag::PrimeField field(2);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dflag::build_matrix(store, dense_graph(), 2, {}, field, threads));
}
BENCHMARK(BM_MatrixParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
