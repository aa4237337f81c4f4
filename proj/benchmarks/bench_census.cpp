#include <benchmark/benchmark.h>

#include "magma/census.hpp"
#include "magma/cycle_index.hpp"
#include "magma/oracle.hpp"

namespace {

void BM_CountBinary(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(magma::count_k_magmas(n, 2));
  }
}
BENCHMARK(BM_CountBinary)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_CountTernary(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(magma::count_k_magmas(n, 3));
  }
}
BENCHMARK(BM_CountTernary)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_CycleIndexDirect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(magma::cycle_index_direct(n));
  }
}
BENCHMARK(BM_CycleIndexDirect)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

void BM_InduceBinary(benchmark::State& state) {
  const auto z = magma::cycle_index_direct(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(magma::induce(z, 2));
  }
}
BENCHMARK(BM_InduceBinary)->DenseRange(3, 9, 3)->Unit(benchmark::kMicrosecond);

void BM_BruteForceOrbits(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto k = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(magma::count_orbits_bruteforce(n, k));
  }
}
BENCHMARK(BM_BruteForceOrbits)->Args({2, 2})->Args({3, 2})->Args({2, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
