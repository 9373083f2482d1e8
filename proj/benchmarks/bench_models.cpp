#include <benchmark/benchmark.h>

#include "polya/models.hpp"
#include "polya/montecarlo.hpp"
#include "polya/rng.hpp"

namespace {

using namespace polya;

void BM_Run(benchmark::State& state, Rule rule) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModelSpec spec = ModelSpec::make(rule, {0.3, 0.1}, Word::parse("01"));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    RngStream rng(1, trial++);
    benchmark::DoNotOptimize(run_final(spec, n, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_Run, end, Rule::End)->Arg(1 << 10)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_Run, tandem, Rule::Tandem)->Arg(1 << 10)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_Run, interspersed, Rule::Interspersed)->Arg(1 << 10)->Arg(1 << 16);

void BM_SymbolFreqCounts(benchmark::State& state) {
  const ModelSpec spec = ModelSpec::make(Rule::End, {0.3, 0.1}, Word::parse("01"));
  const SimConfig config = SimConfig::make(8, static_cast<std::size_t>(state.range(0)), 3,
                                           RecordMode::RunningCounts, 1);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_symbol_freq(spec, config));
  state.SetItemsProcessed(state.iterations() * 8 * state.range(0));
}
BENCHMARK(BM_SymbolFreqCounts)->Arg(100000);

void BM_TandemPairs(benchmark::State& state) {
  const ModelSpec spec = ModelSpec::make(Rule::Tandem, {1.0, 1.0}, Word::parse("0"));
  const SimConfig config = SimConfig::make(8, static_cast<std::size_t>(state.range(0)), 3,
                                           RecordMode::RunningCounts, 1);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_pair_freqs(spec, config));
  state.SetItemsProcessed(state.iterations() * 8 * state.range(0));
}
BENCHMARK(BM_TandemPairs)->Arg(100000);

}  // namespace
