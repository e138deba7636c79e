#include <benchmark/benchmark.h>

#include "bchyper/coherent.hpp"
#include "bchyper/gamma.hpp"
#include "bchyper/hyper.hpp"
#include "bchyper/quad.hpp"

namespace {

using namespace bchyper;

const BiComplex kZ = BiComplex::from_idempotent({0.4, 0.2}, {-0.3, 0.5});

void BM_Gauss2F1(benchmark::State& state) {
  const PfqParams params({BiComplex(0.3), BiComplex::from_idempotent({1.2, 0.1}, {0.7, -0.2})},
                         {BiComplex(1.9)});
  for (auto _ : state) benchmark::DoNotOptimize(pfq_value(params, kZ));
}
BENCHMARK(BM_Gauss2F1);

void BM_Kummer1F1(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  const PfqParams params({BiComplex(0.5)}, {BiComplex(1.5)});
  const BiComplex z = BiComplex::from_idempotent({r, 0.0}, {0.0, r});
  for (auto _ : state) benchmark::DoNotOptimize(pfq_value(params, z));
}
BENCHMARK(BM_Kummer1F1)->Arg(1)->Arg(10)->Arg(50);

void BM_Gamma(benchmark::State& state) {
  const BiComplex z = BiComplex::from_idempotent({2.3, 0.7}, {0.4, -1.1});
  for (auto _ : state) benchmark::DoNotOptimize(bc_gamma(z));
}
BENCHMARK(BM_Gamma);

void BM_GaussJacobiReal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi_unit(n, -0.3, 0.6));
}
BENCHMARK(BM_GaussJacobiReal)->Arg(16)->Arg(64)->Arg(256);

void BM_GaussJacobiComplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_jacobi_unit(n, Complex(-0.3, 0.1), Complex(0.6, -0.2)));
}
BENCHMARK(BM_GaussJacobiComplex)->Arg(16)->Arg(64)->Arg(256);

void BM_GaussLaguerre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(n, Complex(0.5, 0.2)));
}
BENCHMARK(BM_GaussLaguerre)->Arg(16)->Arg(64)->Arg(256);

void BM_EulerIntegral(benchmark::State& state) {
  const PfqParams params({BiComplex(1.1), BiComplex(0.4)}, {BiComplex(2.7)});
  const ProductCurve curve{CurveKind::UnitInterval, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(euler_integral(params, kZ, curve));
}
BENCHMARK(BM_EulerIntegral)->Arg(64);

void BM_BuildState(benchmark::State& state) {
  CoherentSpec spec{PfqParams({BiComplex(1.5)}, {BiComplex(2.5)}),
                    BiComplex::from_idempotent({0.6, 0.2}, {0.3, -0.4}),
                    static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(build_state(spec));
}
BENCHMARK(BM_BuildState)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
