#include <benchmark/benchmark.h>

#include "hirano/blockthm.hpp"
#include "hirano/decomp.hpp"
#include "hirano/drazin.hpp"
#include "hirano/genfuzz.hpp"
#include "hirano/poly.hpp"

using namespace hirano;

namespace {

/// A singular matrix with spectrum in {-1, 0, 1} and a nontrivial nil part.
Matrix hirano_input(std::size_t n) {
  GenConfig cfg;
  cfg.seed = 17;
  std::vector<int> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = static_cast<int>(i % 3) - 1;
  return gen_class(n, diag, cfg);
}

void BM_DrazinInverse(benchmark::State& state) {
  const Matrix a = hirano_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(drazin_inverse(a));
}
BENCHMARK(BM_DrazinInverse)->DenseRange(2, 10, 2);

void BM_CharPoly(benchmark::State& state) {
  const Matrix a = hirano_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 10, 2);

void BM_HiranoInverse(benchmark::State& state) {
  const Matrix a = hirano_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hirano_inverse(a));
}
BENCHMARK(BM_HiranoInverse)->DenseRange(2, 10, 2);

void BM_TripotentSplit(benchmark::State& state) {
  const Matrix a = hirano_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tripotent_nilpotent(a));
}
BENCHMARK(BM_TripotentSplit)->DenseRange(2, 10, 2);

void BM_VerifyT3_4(benchmark::State& state) {
  GenConfig cfg;
  cfg.block_size = static_cast<std::size_t>(state.range(0));
  const BlockInstance inst = gen_instance(TheoremId::T3_4, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(verify_conclusion(TheoremId::T3_4, inst));
}
BENCHMARK(BM_VerifyT3_4)->DenseRange(2, 4, 1);

void BM_SweepT2_7(benchmark::State& state) {
  GenConfig cfg;
  cfg.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(soundness_sweep(TheoremId::T2_7, cfg, Profile::Default, {2, 3, 4}, 1));
}
BENCHMARK(BM_SweepT2_7)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
