#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "mackey/discrete_series.hpp"
#include "mackey/enveloping.hpp"
#include "mackey/principal_series.hpp"

using namespace mackey;

namespace {

Matrix sample_sl(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::sin(1.0 + 3 * i + 7 * j);
  m.diagonal().array() += 2.0;
  return m / std::pow(m.determinant(), 1.0 / n);
}

void BM_MatExp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AlgebraElement x = mat_log(sample_sl(n));
  for (auto _ : state) benchmark::DoNotOptimize(mat_exp(x));
}
BENCHMARK(BM_MatExp)->Arg(2)->Arg(3)->Arg(5);

void BM_Iwasawa(benchmark::State& state) {
  const Matrix g = sample_sl(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iwasawa_decompose(g));
}
BENCHMARK(BM_Iwasawa)->Arg(2)->Arg(3)->Arg(5);

void BM_Cartan(benchmark::State& state) {
  const Matrix g = sample_sl(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cartan_decompose(g));
}
BENCHMARK(BM_Cartan)->Arg(2)->Arg(3)->Arg(5);

void BM_ContractedWave(benchmark::State& state) {
  const WaveSpec spec{sl2::functional(30.0), 0.3, 0.25};
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contracted_wave(spec, {x, 0.2}));
    x = x > 1.0 ? 0.1 : x + 1e-3;
  }
}
BENCHMARK(BM_ContractedWave);

void BM_Synthesize(benchmark::State& state) {
  const int nb = static_cast<int>(state.range(0));
  BoundaryFunction f{std::vector<Complex>(static_cast<std::size_t>(nb))};
  for (int j = 0; j < nb; ++j) f.values[static_cast<std::size_t>(j)] = std::cos(2.0 * std::numbers::pi * j / nb);
  const auto pts = PGrid{-1.5, 1.5, 0.25}.points();
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(f, sl2::functional(30.0), 0.5, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()) * nb);
}
BENCHMARK(BM_Synthesize)->Arg(256)->Arg(1024);

void BM_KTypeProjection(benchmark::State& state) {
  HoloSeries f{3, {}};
  for (int m = 0; m <= 16; ++m) f.coeffs.push_back(std::polar(std::pow(0.6, m), 0.3 * m));
  const Section p = ktype_project(section(f), 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(p({0.1, -0.05}));
}
BENCHMARK(BM_KTypeProjection);

void BM_PbwMultiply(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // Fresh algebra each round so the reordering cache starts cold.
    const auto alg = sl2_algebra(Rational(1, 2));
    benchmark::DoNotOptimize(alg->multiply(alg->monomial({0, 0, d}), alg->monomial({d, d, 0})));
  }
}
BENCHMARK(BM_PbwMultiply)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
