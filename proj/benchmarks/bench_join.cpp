#include <benchmark/benchmark.h>

#include "equik/join_topology.hpp"

namespace {

void BM_JoinHomology(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equik::reduced_homology(equik::boundary_matrices(equik::JoinComplex(n, k))));
  }
}
BENCHMARK(BM_JoinHomology)->Args({2, 4})->Args({2, 6})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_OracleConsistency(benchmark::State& state) {
  for (auto _ : state) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t k = 1; k <= 4; ++k) benchmark::DoNotOptimize(equik::oracle_consistency(n, k));
    }
  }
}
BENCHMARK(BM_OracleConsistency)->Unit(benchmark::kMillisecond);

void BM_MayerVietorisDelta(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equik::mayer_vietoris_delta(l, l));
}
BENCHMARK(BM_MayerVietorisDelta)->DenseRange(2, 10, 4);

}  // namespace
