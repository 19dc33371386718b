// Serial reference path vs OpenMP path on the heavy kernels.
// Argument 0 runs Exec::serial, 1 runs Exec::parallel.

#include <benchmark/benchmark.h>

#include "riflab/kernels.hpp"
#include "riflab/norms.hpp"
#include "riflab/registry.hpp"

using namespace riflab;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_InvSeries(benchmark::State& s) {
  const BiPoly p = registry_entry("psi").p;
  for (auto _ : s) benchmark::DoNotOptimize(inv_series(p, 512, mode(s)));
}

void BM_DirichletTail(benchmark::State& s) {
  const Rif phi = registry_entry("favorite").rif();
  const SeriesGrid a = taylor(phi, 512);
  for (auto _ : s) benchmark::DoNotOptimize(dirichlet_partial(a, 0.5, 0.5, 512, {.exec = mode(s)}));
}

void BM_Singularities(benchmark::State& s) {
  const Rif phi = registry_entry("amy").rif();
  ScanConfig cfg;
  cfg.exec = mode(s);
  for (auto _ : s) benchmark::DoNotOptimize(find_singularities(phi, cfg));
}

void BM_HpNorm(benchmark::State& s) {
  const Rif phi = registry_entry("favorite").rif();
  QuadConfig cfg;
  cfg.exec = mode(s);
  cfg.scan.exec = mode(s);
  const auto sing = find_singularities(phi, cfg.scan);
  for (auto _ : s) benchmark::DoNotOptimize(hp_norm_derivative(phi, Axis::z1, 1.2, sing, cfg));
}

void BM_Doug(benchmark::State& s) {
  const Rif phi = registry_entry("continuous").rif();
  DougConfig cfg;
  cfg.ladder = {64, 128};
  cfg.early_stop = 0.0;
  cfg.exec = mode(s);
  for (auto _ : s) benchmark::DoNotOptimize(doug_quadrature(phi, cfg));
}

}  // namespace

BENCHMARK(BM_InvSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirichletTail)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Singularities)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HpNorm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_Doug)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
