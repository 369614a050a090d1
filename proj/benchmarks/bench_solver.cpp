#include <benchmark/benchmark.h>

#include <cmath>

#include "convexchain/chain_solver.hpp"
#include "convexchain/sampling.hpp"

namespace cc = convexchain;

namespace {

cc::ChainInstance makeInstance(long n, std::uint64_t seed) {
  const cc::Triangle T = cc::Triangle::standard();
  return cc::ChainInstance(T, cc::sampleUniformTriangle({seed, 0}, T, n));
}

void BM_LongestChainExact(benchmark::State& state) {
  const auto inst = makeInstance(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::longestChainExact(inst));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LongestChainExact)->Range(250, 16000)->Complexity();

void BM_LongestChainBanded(benchmark::State& state) {
  const auto inst = makeInstance(state.range(0), 1);
  const double halfWidth =
      5.0 * std::cbrt(1.0 / static_cast<double>(state.range(0))) *
      std::sqrt(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc::longestChainBanded(inst, halfWidth));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LongestChainBanded)->Range(1000, 64000)->Complexity();

void BM_SampleUniformTriangle(benchmark::State& state) {
  const cc::Triangle T = cc::Triangle::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cc::sampleUniformTriangle({2, 0}, T, state.range(0)));
  }
}
BENCHMARK(BM_SampleUniformTriangle)->Range(1000, 1000000);

void BM_DistanceToArc(benchmark::State& state) {
  const cc::Triangle T = cc::Triangle::standard();
  const auto pts = cc::sampleUniformTriangle({3, 0}, T, 1000);
  for (auto _ : state) {
    double acc = 0.0;
    for (const auto& p : pts) acc += cc::distanceToParabolaArc(p);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_DistanceToArc);

}  // namespace

BENCHMARK_MAIN();
