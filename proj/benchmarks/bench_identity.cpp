#include <benchmark/benchmark.h>

#include "mzstar/identity.hpp"

namespace {

using namespace mzstar;

void BM_Identity(benchmark::State& state) {
  const std::string name = identity_names()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  SuiteConfig c;
  c.samples = 10;
  c.truncation_samples = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_identity(name, c));
}
BENCHMARK(BM_Identity)->DenseRange(0, 9)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_PartialFraction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partial_fraction_check(1, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PartialFraction)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
