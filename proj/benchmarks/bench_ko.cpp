#include <benchmark/benchmark.h>

#include "mzstar/ko_extract.hpp"

namespace {

using namespace mzstar;

void BM_Expansion(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_theorem_rhs(degree));
}
BENCHMARK(BM_Expansion)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

void BM_CrossValidate(benchmark::State& state) {
  shared_expansion();
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(4, 3, 2));
}
BENCHMARK(BM_CrossValidate)->Unit(benchmark::kMillisecond);

void BM_HeightOneTaylor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(height_one_taylor(0.25, 0.22, static_cast<int>(state.range(0)), 256));
}
BENCHMARK(BM_HeightOneTaylor)->Arg(20)->Arg(42)->Unit(benchmark::kMillisecond);

}  // namespace
