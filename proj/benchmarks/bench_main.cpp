#include <benchmark/benchmark.h>

#include "hgcalc/operators.hpp"
#include "hgcalc/random.hpp"
#include "hgcalc/representations.hpp"
#include "hgcalc/tensor.hpp"

namespace {

using namespace hgcalc;

OrientedHypergraph instance(int n, int m, int card) {
  return random_instance(std::uint64_t{42}, RandomParams{n, m, card, n});
}

void BM_VertexPLaplacian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OrientedHypergraph h = instance(n, 4 * n, 6);
  SplitMix64 rng(1);
  const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
  const OperatorConfig c = random_exponents(rng);
  const auto f = random_function(rng, h.vertex_count());
  for (auto _ : state) benchmark::DoNotOptimize(vertex_p_laplacian(h, w, c, f, 3.0));
  state.SetComplexityN(n);
}
BENCHMARK(BM_VertexPLaplacian)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_HyperarcPLaplacian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OrientedHypergraph h = instance(n, 4 * n, 6);
  SplitMix64 rng(2);
  const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
  const OperatorConfig c = random_exponents(rng);
  const auto F = random_function(rng, h.arc_count());
  for (auto _ : state) benchmark::DoNotOptimize(hyperarc_p_laplacian(h, w, c, F, 3.0));
  state.SetComplexityN(n);
}
BENCHMARK(BM_HyperarcPLaplacian)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_EncodeTensor(benchmark::State& state) {
  const int card = static_cast<int>(state.range(0));
  const OrientedHypergraph h = instance(12, 20, card);
  for (auto _ : state) benchmark::DoNotOptimize(encode_tensor(h, EntryMode::Simplified));
}
BENCHMARK(BM_EncodeTensor)->DenseRange(2, 5);

void BM_DecodeTensor(benchmark::State& state) {
  const int card = static_cast<int>(state.range(0));
  const OrientedHypergraph h = instance(12, 20, card);
  const SparseAdjacencyTensor t = encode_tensor(h, EntryMode::Simplified, true);
  for (auto _ : state) benchmark::DoNotOptimize(decode_tensor_oriented(t));
}
BENCHMARK(BM_DecodeTensor)->DenseRange(2, 4);

void BM_StarExpansionRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OrientedHypergraph h = instance(n, 2 * n, 5);
  for (auto _ : state) {
    const auto star = to_bipartite(h);
    benchmark::DoNotOptimize(from_bipartite(star.graph, star.hints));
  }
}
BENCHMARK(BM_StarExpansionRoundTrip)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace
BENCHMARK_MAIN();
