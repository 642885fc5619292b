#include <benchmark/benchmark.h>

#include "circinv/closed_form.hpp"
#include "circinv/spectral.hpp"

using namespace circinv;
using namespace circinv::closed_form;

namespace {

void BM_Sym3ClosedForm(benchmark::State& state) {
  const SymThreeParam f{4, 1, 0.5, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(inverse_sym3(f));
  state.SetComplexityN(state.range(0));
}

void BM_ThreeParamClosedForm(benchmark::State& state) {
  const ThreeParamRow f{3, -1, 0.5, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(inverse_3param(f));
  state.SetComplexityN(state.range(0));
}

void BM_TridiagClosedForm(benchmark::State& state) {
  const TridiagSym f{3, -1, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(inverse_tridiag_sym(f));
  state.SetComplexityN(state.range(0));
}

void BM_Sym3Dft(benchmark::State& state) {
  const auto row = generate(SymThreeParam{4, 1, 0.5, static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(spectral::dft_inverse(row));
  state.SetComplexityN(state.range(0));
}

void BM_Sym3Dense(benchmark::State& state) {
  const auto row = generate(SymThreeParam{4, 1, 0.5, static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(spectral::dense_inverse_row(row));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Sym3ClosedForm)->RangeMultiplier(4)->Range(1 << 6, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_ThreeParamClosedForm)->RangeMultiplier(4)->Range(1 << 6, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_TridiagClosedForm)->RangeMultiplier(4)->Range(1 << 6, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_Sym3Dft)->RangeMultiplier(4)->Range(1 << 6, 1 << 12)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_Sym3Dense)->RangeMultiplier(4)->Range(1 << 6, 1 << 10)->Complexity(benchmark::oNCubed);
BENCHMARK_MAIN();
