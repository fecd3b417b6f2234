#include <random>

#include <benchmark/benchmark.h>

#include "equik/normal_forms.hpp"

namespace {

equik::IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  equik::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  }
  return m;
}

void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const equik::IntMatrix a = random_matrix(n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(equik::snf(a));
}
BENCHMARK(BM_Snf)->RangeMultiplier(2)->Range(4, 64);

void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const equik::IntMatrix a = random_matrix(n, n + 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(equik::hnf(a));
}
BENCHMARK(BM_Hnf)->RangeMultiplier(2)->Range(4, 64);

void BM_KernelBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const equik::IntMatrix a = random_matrix(2 * n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(equik::kernel_basis(a));
}
BENCHMARK(BM_KernelBasis)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
