#include <benchmark/benchmark.h>

#include "spline_affine/spline_affine.hpp"

using namespace spline_affine;

static void BM_BuildSpline(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_spline(m));
}
BENCHMARK(BM_BuildSpline)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

static void BM_WalshSpectrum(benchmark::State& state) {
  const PiecewisePoly psi = build_spline(static_cast<unsigned>(state.range(0))).poly;
  for (auto _ : state) benchmark::DoNotOptimize(walsh_spectrum(psi, 4096));
}
BENCHMARK(BM_WalshSpectrum)->Arg(1)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_AffineGram(benchmark::State& state) {
  const PiecewisePoly psi = build_spline(static_cast<unsigned>(state.range(0))).poly;
  const std::uint64_t count = std::uint64_t{1} << state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(affine_gram(psi, 0, count));
}
BENCHMARK(BM_AffineGram)->Args({1, 7})->Args({4, 7})->Args({4, 10})->Unit(benchmark::kMillisecond);

static void BM_PairwiseGram(benchmark::State& state) {
  const auto sys = affine_system(build_spline(static_cast<unsigned>(state.range(0))).poly, 64);
  for (auto _ : state) benchmark::DoNotOptimize(gram(sys));
}
BENCHMARK(BM_PairwiseGram)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& state) {
  const SymmetricMatrix g = affine_gram(build_spline(2).poly, 0, std::uint64_t{1} << state.range(0)).to_double();
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigenvalues(g));
}
BENCHMARK(BM_Jacobi)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_InnerProduct(benchmark::State& state) {
  const PiecewisePoly psi = build_spline(static_cast<unsigned>(state.range(0))).poly;
  const PiecewisePoly w = walsh_fn(1000);
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(psi, w));
}
BENCHMARK(BM_InnerProduct)->Arg(2)->Arg(6)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
