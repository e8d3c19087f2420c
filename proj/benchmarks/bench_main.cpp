#include <benchmark/benchmark.h>

#include <brjuno/brjuno_real.hpp>
#include <brjuno/cf.hpp>
#include <brjuno/complex_brjuno.hpp>
#include <brjuno/dilog.hpp>
#include <brjuno/input.hpp>
#include <brjuno/lindstedt.hpp>
#include <brjuno/operator_bench.hpp>

using namespace brjuno;

static void BM_ExpandSurd(benchmark::State& state) {
  RealInput x(noble(3));
  for (auto _ : state) benchmark::DoNotOptimize(expand(x, Rational(1), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExpandSurd)->Arg(60)->Arg(200);

static void BM_ExpandFloat(benchmark::State& state) {
  RealInput x = RealInput::from_double(0.3141592653589793);
  for (auto _ : state) benchmark::DoNotOptimize(expand(x, Rational(1, 2), 60));
}
BENCHMARK(BM_ExpandFloat);

static void BM_BrjunoGolden(benchmark::State& state) {
  RealInput x(golden_mean());
  for (auto _ : state) benchmark::DoNotOptimize(brjuno_B(x, 60));
}
BENCHMARK(BM_BrjunoGolden);

static void BM_Neumann(benchmark::State& state) {
  auto f = neg_log_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(neumann_inverse(f, Rational(1, 2), 1e-12));
}
BENCHMARK(BM_Neumann)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_Dilog(benchmark::State& state) {
  std::complex<double> z(0.3, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dilog(z));
    z += std::complex<double>(1e-9, 0);
  }
}
BENCHMARK(BM_Dilog);

static void BM_MonoidEnumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(monoid_enumerate(state.range(0)));
}
BENCHMARK(BM_MonoidEnumerate)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_ComplexEval(benchmark::State& state) {
  TruncationPolicy p;
  p.q_max = state.range(0);
  ComplexBrjuno B(p);
  for (auto _ : state) benchmark::DoNotOptimize(B({0.618, 1e-3}));
}
BENCHMARK(BM_ComplexEval)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_SemiStandard(benchmark::State& state) {
  RealInput rho(golden_mean());
  for (auto _ : state) benchmark::DoNotOptimize(semi_standard_series(rho, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SemiStandard)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
