#include <benchmark/benchmark.h>

#include <vector>

#include "dcp/operators.hpp"
#include "dcp/orthopoly.hpp"
#include "dcp/spectra.hpp"
#include "dcp/verification.hpp"
#include "dcp/wavefunctions.hpp"

using namespace dcp;

namespace {

const ModelParams params{Rational(1, 4), Rational(3, 4), Rational(-1)};

void BM_NormalizeHighX2Powers(benchmark::State& state) {
  std::vector<RawTerm> raw;
  for (int b = 0; b < state.range(0); ++b) raw.push_back({Rational(b + 1), b % 3, b, -b / 2, Rational(0)});
  for (auto _ : state) benchmark::DoNotOptimize(normalize(raw));
}
BENCHMARK(BM_NormalizeHighX2Powers)->Arg(4)->Arg(8)->Arg(16);

void BM_HamiltonianOnEigenfunction(benchmark::State& state) {
  const DunklCoulombOperators ops(params);
  const int level = static_cast<int>(state.range(0));
  const auto w = full_wavefunction(enumerate_level(level).back(), params);
  for (auto _ : state) benchmark::DoNotOptimize(ops.hamiltonian(w.exact_unnormalized));
}
BENCHMARK(BM_HamiltonianOnEigenfunction)->Arg(1)->Arg(3)->Arg(5);

void BM_CasimirQOnTerm(benchmark::State& state) {
  const DunklCoulombOperators ops(params);
  const FunctionExpr f = FunctionExpr::monomial(Rational(1), 3, 1, -2, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(ops.Q(f));
}
BENCHMARK(BM_CasimirQOnTerm);

void BM_GaussJacobiRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi(-0.25, 0.25, order));
}
BENCHMARK(BM_GaussJacobiRule)->Arg(8)->Arg(32)->Arg(128);

void BM_FullWavefunction(benchmark::State& state) {
  const QuantumNumbers qn{static_cast<int>(state.range(0)), 2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(full_wavefunction(qn, params));
}
BENCHMARK(BM_FullWavefunction)->Arg(0)->Arg(3)->Arg(6);

void BM_Su2Check(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_su2_deformation(params, 2));
}
BENCHMARK(BM_Su2Check)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
