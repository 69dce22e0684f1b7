#include <benchmark/benchmark.h>

#include <toricdimer/toricdimer.hpp>

using namespace toricdimer;

namespace {

void BM_EnumerateBnr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TorusGraph g = build_bnr(n, 1).graph;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_matchings(g));
}
BENCHMARK(BM_EnumerateBnr)->DenseRange(2, 10, 2);

void BM_EnumerateHoneycomb(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  const TorusGraph g = build_honeycomb(Mat2{k, 0, 0, k}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_matchings(g));
}
BENCHMARK(BM_EnumerateHoneycomb)->DenseRange(2, 4);

void BM_DeterminantExpansion(benchmark::State& state) {
  const TorusGraph g = build_honeycomb(Mat2{state.range(0), 0, 0, state.range(0)}).graph;
  const OperatorMatrix m = operator_matrix(g, kasteleyn_signing(g));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_expansion(m));
}
BENCHMARK(BM_DeterminantExpansion)->DenseRange(2, 3);

void BM_DeterminantBareiss(benchmark::State& state) {
  const TorusGraph g = build_honeycomb(Mat2{state.range(0), 0, 0, state.range(0)}).graph;
  const OperatorMatrix m = operator_matrix(g, kasteleyn_signing(g));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_bareiss(m));
}
BENCHMARK(BM_DeterminantBareiss)->DenseRange(2, 6);

void BM_HamiltonianVisibility(benchmark::State& state) {
  const auto c = CirculantDigraph::make(state.range(0), 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_hamiltonian(c, HamiltonMethod::Visibility));
}
BENCHMARK(BM_HamiltonianVisibility)->RangeMultiplier(10)->Range(10, 100000);

void BM_HamiltonianRankin(benchmark::State& state) {
  const auto c = CirculantDigraph::make(state.range(0), 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_hamiltonian(c, HamiltonMethod::Rankin));
}
BENCHMARK(BM_HamiltonianRankin)->RangeMultiplier(10)->Range(10, 10000);

void BM_HamiltonianBruteForce(benchmark::State& state) {
  const auto c = CirculantDigraph::make(state.range(0), 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_hamiltonian(c, HamiltonMethod::BruteForce));
}
BENCHMARK(BM_HamiltonianBruteForce)->DenseRange(7, 11, 2);

}  // namespace
BENCHMARK_MAIN();
