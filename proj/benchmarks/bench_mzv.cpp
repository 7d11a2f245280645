#include <benchmark/benchmark.h>

#include "mzstar/mzv.hpp"

namespace {

using namespace mzstar;

// Hölder tables are cached per precision; each iteration uses a fresh precision.
void BM_MzsvHolderCold(benchmark::State& state) {
  const Composition c{3, 1, 2, 1, 1};
  long bits = state.range(0);
  for (auto _ : state) {
    MzvOptions o;
    o.precision_bits = bits++;
    benchmark::DoNotOptimize(mzsv_numeric(c, o));
  }
}
BENCHMARK(BM_MzsvHolderCold)->Arg(128)->Arg(256)->Arg(512)->Iterations(8)->Unit(benchmark::kMillisecond);

void BM_MzsvHolderWarm(benchmark::State& state) {
  MzvOptions o;
  const Composition c{3, 1, 2, 1, 1};
  mzsv_numeric(c, o);
  for (auto _ : state) benchmark::DoNotOptimize(mzsv_numeric(c, o));
}
BENCHMARK(BM_MzsvHolderWarm);

void BM_MzsvTruncated(benchmark::State& state) {
  MzvOptions o;
  o.method = MzvMethod::truncated;
  o.precision_bits = 128;
  o.trunc_N = static_cast<unsigned long>(state.range(0));
  const Composition c{2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(mzsv_numeric(c, o));
}
BENCHMARK(BM_MzsvTruncated)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_XStarSumCold(benchmark::State& state) {
  const SumKey key{static_cast<int>(state.range(0)), 3, 2};
  long bits = 1000;
  for (auto _ : state) {
    MzvOptions o;
    o.precision_bits = bits++;
    benchmark::DoNotOptimize(x_star_sum(key, o));
  }
}
BENCHMARK(BM_XStarSumCold)->Arg(6)->Arg(8)->Arg(10)->Iterations(4)->Unit(benchmark::kMillisecond);

}  // namespace
