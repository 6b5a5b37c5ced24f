#include "floormap/analysis.hpp"
#include "floormap/orbit.hpp"
#include "floormap/rational.hpp"

#include <benchmark/benchmark.h>

using namespace floormap;

namespace {

void BM_ApplyMapInt(benchmark::State& state) {
  Rational lambda(-9, 10);
  Int x = 123456;
  for (auto _ : state) benchmark::DoNotOptimize(apply_map(lambda, x));
}
BENCHMARK(BM_ApplyMapInt);

void BM_ApplyMapRational(benchmark::State& state) {
  Rational lambda(-9, 10);
  Rational x(123456789, 1001);
  for (auto _ : state) benchmark::DoNotOptimize(apply_map(lambda, x));
}
BENCHMARK(BM_ApplyMapRational);

void BM_ApplyMapBigInt(benchmark::State& state) {
  Rational lambda(-9, 10);
  Int x = Int(1) << 256;
  for (auto _ : state) benchmark::DoNotOptimize(apply_map(lambda, x));
}
BENCHMARK(BM_ApplyMapBigInt);

void BM_ClassifySmallIndex(benchmark::State& state) {
  Rational lambda(3, 4);  // m = 3
  for (auto _ : state) benchmark::DoNotOptimize(classify_lambda(lambda));
}
BENCHMARK(BM_ClassifySmallIndex);

void BM_ClassifyLargeIndex(benchmark::State& state) {
  Rational lambda(999983, 999984);  // m = 999983: exercises the closed form
  for (auto _ : state) benchmark::DoNotOptimize(classify_lambda(lambda));
}
BENCHMARK(BM_ClassifyLargeIndex);

void BM_FixedPoints(benchmark::State& state) {
  Rational lambda(state.range(0), state.range(0) + 1);  // PosUnit(m), m = range
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points(lambda));
}
BENCHMARK(BM_FixedPoints)->Arg(3)->Arg(100)->Arg(10000);

void BM_BasinDecomposition(benchmark::State& state) {
  Rational lambda(state.range(0), state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(basin_decomposition(lambda));
}
BENCHMARK(BM_BasinDecomposition)->Arg(3)->Arg(100)->Arg(10000);

void BM_PredictLimit(benchmark::State& state) {
  Rational lambda(-5, 2);
  Rational x0(-123456, 7);
  for (auto _ : state) benchmark::DoNotOptimize(predict_limit(lambda, x0));
}
BENCHMARK(BM_PredictLimit);

void BM_SimulateConvergent(benchmark::State& state) {
  Rational lambda(-1, 2);
  Rational x0(1 << state.range(0));
  Int budget = default_max_steps(x0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_orbit(lambda, x0, budget));
}
BENCHMARK(BM_SimulateConvergent)->Arg(8)->Arg(16)->Arg(24);

void BM_SimulateCertifiedDivergent(benchmark::State& state) {
  Rational lambda(3, 2);
  Rational x0(10);
  Int budget = default_max_steps(x0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_orbit(lambda, x0, budget));
}
BENCHMARK(BM_SimulateCertifiedDivergent);

void BM_SimulateSlowAlternating(benchmark::State& state) {
  Rational lambda(-9, 10);  // no certificate shortcut: runs the whole convergent tail
  Rational x0(-1000000);
  Int budget = default_max_steps(x0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_orbit(lambda, x0, budget));
}
BENCHMARK(BM_SimulateSlowAlternating);

void BM_RationalParse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Rational::parse("-123456789/987654321"));
}
BENCHMARK(BM_RationalParse);

void BM_RationalStr(benchmark::State& state) {
  Rational r(-123456789, 987654321);
  for (auto _ : state) benchmark::DoNotOptimize(r.str());
}
BENCHMARK(BM_RationalStr);

}  // namespace

BENCHMARK_MAIN();
