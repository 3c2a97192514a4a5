#include <benchmark/benchmark.h>

#include <photonwf/zb.hpp>

#include "bench_common.hpp"

using namespace photonwf;

namespace {

void BM_SynthesizeField(benchmark::State& state) {
  const AmplitudeSet amps = bench::random_amplitudes(std::size_t(state.range(1)), 4);
  const int n = int(state.range(0));
  GridSpec grid{{n, n, n}, bench::kBox};
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_field(amps, grid, 0.3));
  state.SetItemsProcessed(state.iterations() * grid.sites() * state.range(1));
}
BENCHMARK(BM_SynthesizeField)->Args({16, 8})->Args({32, 8})->Args({32, 32});

void BM_ProjectAmplitudes(benchmark::State& state) {
  const AmplitudeSet amps = bench::random_amplitudes(8, 4);
  const int n = int(state.range(0));
  GridSpec grid{{n, n, n}, bench::kBox};
  const FieldGrid f = synthesize_field(amps, grid, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(project_amplitudes(f, 0.3));
  state.SetItemsProcessed(state.iterations() * grid.sites());
}
BENCHMARK(BM_ProjectAmplitudes)->Arg(16)->Arg(32);

void BM_MomentumSeries(benchmark::State& state) {
  const AmplitudeSet amps = bench::random_amplitudes(std::size_t(state.range(0)), 4);
  std::vector<double> times;
  for (int i = 0; i < 64; ++i) times.push_back(0.1 * i);
  for (auto _ : state)
    benchmark::DoNotOptimize(momentum_series(amps, times, Formalism::dual));
  state.SetItemsProcessed(state.iterations() * 64 * state.range(0));
}
BENCHMARK(BM_MomentumSeries)->Arg(4)->Arg(16);

void BM_RTVectors(benchmark::State& state) {
  const WaveVector kv = WaveVector::of({1.3, -0.7, 2.1});
  for (auto _ : state) benchmark::DoNotOptimize(rt_vectors(kv));
}
BENCHMARK(BM_RTVectors);

}  // namespace
