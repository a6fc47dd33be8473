#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "rfa/box_dimension.hpp"
#include "rfa/functional_equation.hpp"
#include "rfa/real_function.hpp"
#include "rfa/weierstrass_fourier.hpp"

namespace {

rfa::RealFunction cos_2pi() {
  return rfa::RealFunction::analytic(
      [](double x) {
        const double t = x - std::floor(x);
        return std::cos(2.0 * std::numbers::pi * t);
      },
      true);
}

void BM_series_eval(benchmark::State& state) {
  rfa::EquationParams params;
  params.a = 0.7;
  params.b = 2.0;
  const rfa::SeriesSolution f = rfa::solve(params, cos_2pi(), 1.0, 1e-10);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(x));
    x += 1e-3;
    if (x > 1.0) x -= 1.0;
  }
}
BENCHMARK(BM_series_eval);

void BM_eval_tilde(benchmark::State& state) {
  const rfa::WfParams wp{0.6};
  const int k = static_cast<int>(state.range(0));
  double x = 0.1234;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfa::eval_tilde(rfa::basis_cos(k), wp, x));
    x += 1e-3;
    if (x > 1.0) x -= 1.0;
  }
}
BENCHMARK(BM_eval_tilde)->Arg(1)->Arg(8)->Arg(64);

void BM_gram_block(benchmark::State& state) {
  const rfa::WfParams wp{0.6};
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfa::gram_hat_block(K, wp));
  }
}
BENCHMARK(BM_gram_block)->Arg(8)->Arg(64);

void BM_box_count(benchmark::State& state) {
  rfa::EquationParams params;
  params.a = 0.7;
  params.b = 2.0;
  const rfa::SeriesSolution f = rfa::solve(params, cos_2pi(), 1.0, 1e-9);
  const rfa::GraphSample graph = rfa::GraphSample::from_function(
      [&](double x) { return f(x); }, 1 << 14);
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfa::box_count(graph, j));
  }
}
BENCHMARK(BM_box_count)->Arg(4)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
