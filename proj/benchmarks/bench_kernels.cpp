#include <benchmark/benchmark.h>

#include "flopwall/barnes.hpp"
#include "flopwall/kclass.hpp"
#include "flopwall/run_config.hpp"
#include "flopwall/series.hpp"
#include "flopwall/special.hpp"

namespace {

using namespace flopwall;
using numkernel::Complex;

void BM_LogGamma(benchmark::State& state) {
  Complex s(3.7, -12.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(numkernel::log_gamma(s));
    s += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogGamma);

void BM_HSeries(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  auto cfg = cli::random_config(r + 1, r, 1);
  auto labels = flopgeom::enumerate_fixed_points(cfg, flopgeom::Side::plus);
  for (auto _ : state) benchmark::DoNotOptimize(hypergeom::h_series(cfg, flopgeom::Side::plus, labels[0], order));
}
BENCHMARK(BM_HSeries)->Args({1, 80})->Args({2, 20})->Args({3, 10});

void BM_BarnesIntegrate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto cfg = cli::random_config(n, 1, 1);
  const Complex w(std::log(3.0), (n - 1) * numkernel::kPi);
  for (auto _ : state) benchmark::DoNotOptimize(hypergeom::barnes_integrate(w, cfg, 0));
}
BENCHMARK(BM_BarnesIntegrate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FmTransform(benchmark::State& state) {
  auto cfg = cli::random_config(static_cast<int>(state.range(1)), static_cast<int>(state.range(0)), 1);
  auto dm = flopgeom::enumerate_fixed_points(cfg, flopgeom::Side::minus).front();
  auto e = ktheory::generator_e(cfg, dm);
  for (auto _ : state) benchmark::DoNotOptimize(ktheory::fm_transform(cfg, e));
}
BENCHMARK(BM_FmTransform)->Args({1, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
