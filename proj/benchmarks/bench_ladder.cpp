#include <benchmark/benchmark.h>

#include <photonwf/ladder.hpp>

#include "bench_common.hpp"

using namespace photonwf;
using namespace photonwf::ladder;

namespace {

Poly anti_ordered_chain(int pairs) {
  const std::array<int, 3> n{0, 0, 1};
  Poly p(cplx(1.0));
  for (int i = 0; i < pairs; ++i) {
    p = p * Poly(make_a(n, 1)) * Poly(make_ad(n, 1));
    p = p * Poly(make_c(n, 0)) * Poly(make_cd(n, 0));
  }
  return p;
}

void BM_NormalOrder(benchmark::State& state) {
  const Poly p = anti_ordered_chain(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normal_order(p));
}
BENCHMARK(BM_NormalOrder)->Arg(1)->Arg(2)->Arg(3);

void BM_MomentumBilinear(benchmark::State& state) {
  std::vector<ModeKey> modes;
  for (const auto& [key, amp] : bench::random_amplitudes(std::size_t(state.range(0)), 3).entries())
    modes.push_back(key);
  for (auto _ : state)
    for (int comp = 0; comp < 4; ++comp)
      benchmark::DoNotOptimize(momentum_bilinear(modes, comp, 0.3, bench::kBox));
}
BENCHMARK(BM_MomentumBilinear)->Arg(4)->Arg(8);

void BM_CoherentExpectation(benchmark::State& state) {
  const AmplitudeSet amps = bench::random_amplitudes(6, 3);
  std::vector<ModeKey> modes;
  for (const auto& [key, amp] : amps.entries()) modes.push_back(key);
  const Poly j1 = momentum_bilinear(modes, 1, 0.3, bench::kBox);
  for (auto _ : state) benchmark::DoNotOptimize(expectation(j1, Coherent{&amps}));
}
BENCHMARK(BM_CoherentExpectation);

}  // namespace
