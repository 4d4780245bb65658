#include <random>

#include "benchmark/benchmark.h"
#include "signlab/adversary.hpp"
#include "signlab/boolfn.hpp"
#include "signlab/composition.hpp"
#include "signlab/degree.hpp"

using namespace signlab;

namespace {

BoolFunction random_function(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return BoolFunction::from_predicate(n, [&](InputMask) { return (rng() & 1U) != 0; });
}

void BM_FourierTransform(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_transform(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FourierTransform)->DenseRange(4, 12, 2);

void BM_SignDegreeRandom(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(sign_degree(f));
}
BENCHMARK(BM_SignDegreeRandom)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SignDegreeParity(benchmark::State& state) {
  const auto f = BoolFunction::parity(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sign_degree(f));
}
BENCHMARK(BM_SignDegreeParity)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MinskyPapert(benchmark::State& state) {
  const auto f = compose_functions(BoolFunction::disjunction(2), BoolFunction::conjunction(4)).table;
  for (auto _ : state) benchmark::DoNotOptimize(sign_degree(f));
}
BENCHMARK(BM_MinskyPapert)->Unit(benchmark::kMillisecond);

void BM_CheckSupermultiplicativity(benchmark::State& state) {
  const auto f = BoolFunction::disjunction(2);
  const auto g = BoolFunction::parity(3);
  for (auto _ : state) benchmark::DoNotOptimize(check_supermultiplicativity(f, g, Alpha::infinity()));
}
BENCHMARK(BM_CheckSupermultiplicativity)->Unit(benchmark::kMillisecond);

void BM_StarRatio(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto f = BoolFunction::disjunction(k);
  const auto certificate = build_or_certificate(k);
  for (auto _ : state) benchmark::DoNotOptimize(adv_ratio(f, certificate));
}
BENCHMARK(BM_StarRatio)->RangeMultiplier(2)->Range(2, 8);

}  // namespace
BENCHMARK_MAIN();
