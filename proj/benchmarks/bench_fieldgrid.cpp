#include <benchmark/benchmark.h>

#include <photonwf/fieldgrid.hpp>

#include "bench_common.hpp"

using namespace photonwf;

namespace {

FieldGrid physical_field(int n) {
  GridSpec grid{{n, n, n}, bench::kBox};
  const std::int64_t sites = grid.sites();
  std::vector<double> e(std::size_t(3 * sites)), b(std::size_t(3 * sites));
  std::int64_t site = 0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz, ++site) {
        const Vec3 x = grid.site_position(ix, iy, iz);
        e[std::size_t(site)] = std::cos(x[2]) + 0.4 * std::sin(2.0 * x[1]);
        b[std::size_t(sites + site)] = std::cos(x[2]);
        e[std::size_t(sites + site)] = 0.5 * std::cos(x[0] - x[2]);
        b[std::size_t(2 * sites + site)] = 0.5 * std::cos(x[0]);
      }
  return from_real_fields(e, b, grid);
}

void BM_EvolveSpectral(benchmark::State& state) {
  const FieldGrid f = physical_field(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evolve_spectral(f, 0.01, 1));
  state.SetItemsProcessed(state.iterations() * f.spec.sites());
}
BENCHMARK(BM_EvolveSpectral)->Arg(16)->Arg(32);

void BM_EvolveCurlReference(benchmark::State& state) {
  const FieldGrid f = physical_field(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evolve_curl_reference(f, 0.01, 1));
  state.SetItemsProcessed(state.iterations() * f.spec.sites());
}
BENCHMARK(BM_EvolveCurlReference)->Arg(16)->Arg(32);

void BM_Observables(benchmark::State& state) {
  const FieldGrid f = physical_field(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(observables(f));
  state.SetItemsProcessed(state.iterations() * f.spec.sites());
}
BENCHMARK(BM_Observables)->Arg(16)->Arg(32);

}  // namespace
