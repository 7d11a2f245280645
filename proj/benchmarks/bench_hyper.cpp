#include <benchmark/benchmark.h>

#include "mzstar/hyper.hpp"

namespace {

using namespace mzstar;

void BM_F32Accelerated(benchmark::State& state) {
  HyperSampler sampler(3, state.range(0));
  const HyperParams32 p = sampler.trans_two();
  const double target = working_target(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f32_unit_direct(p, target));
}
BENCHMARK(BM_F32Accelerated)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_HyperCheck(benchmark::State& state) {
  const std::string name = hyper_check_names()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(run_hyper_check(name, 10, 1));
}
BENCHMARK(BM_HyperCheck)->DenseRange(0, 3)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
