#include <benchmark/benchmark.h>

#include "equik/ideal_lattice.hpp"
#include "equik/ring_module.hpp"
#include "equik/rokhlin.hpp"

namespace {

void BM_IdealPowerCyclic(benchmark::State& state) {
  const equik::RingRef ring = equik::cyclic_ring(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(equik::ideal_power(ring, 6));
}
BENCHMARK(BM_IdealPowerCyclic)->Arg(3)->Arg(5)->Arg(7);

void BM_IdealPowerS3(benchmark::State& state) {
  const equik::RingRef ring = equik::symmetric_group_s3_ring();
  for (auto _ : state) benchmark::DoNotOptimize(equik::ideal_power(ring, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_IdealPowerS3)->DenseRange(2, 8, 3);

void BM_CircleMaxPower(benchmark::State& state) {
  const equik::RingModule m = equik::circle_module(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(equik::max_nonvanishing_power(m, m.generators() + 2));
}
BENCHMARK(BM_CircleMaxPower)->DenseRange(3, 9, 3);

void BM_ProductZ2Bounds(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equik::product_z2_bounds(m, "z5"));
}
BENCHMARK(BM_ProductZ2Bounds)->DenseRange(1, 4, 1);

}  // namespace
