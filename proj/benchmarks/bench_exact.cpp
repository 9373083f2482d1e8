#include <benchmark/benchmark.h>

#include "polya/info.hpp"
#include "polya/oracle.hpp"
#include "polya/permutations.hpp"

namespace {

using namespace polya;

void BM_Enumerate(benchmark::State& state, Rule rule) {
  const ExactModelSpec spec =
      ExactModelSpec::make(rule, ExactNoise::parse("1/3", "1/4"), Word::parse("01"));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_distribution(spec, n));
}
BENCHMARK_CAPTURE(BM_Enumerate, end, Rule::End)->Arg(6)->Arg(10);
BENCHMARK_CAPTURE(BM_Enumerate, tandem, Rule::Tandem)->Arg(6)->Arg(8);
BENCHMARK_CAPTURE(BM_Enumerate, interspersed, Rule::Interspersed)->Arg(5)->Arg(7);

void BM_SignatureDp(benchmark::State& state) {
  Word u;
  for (int i = 0; i < state.range(0); ++i) u.push_back(bit_from_int(static_cast<unsigned>(i % 3 == 0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_signature_dp(u));
}
BENCHMARK(BM_SignatureDp)->Arg(16)->Arg(64)->Arg(256);

void BM_SignatureRecursion(benchmark::State& state) {
  Word u;
  for (int i = 0; i < state.range(0); ++i) u.push_back(bit_from_int(static_cast<unsigned>(i % 3 == 0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_signature_recursion(u));
}
BENCHMARK(BM_SignatureRecursion)->Arg(16)->Arg(32);

void BM_BlockEntropies(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signature_block_entropies(m));
}
BENCHMARK(BM_BlockEntropies)->Arg(12)->Arg(16)->Arg(20);

void BM_BetaEntropyIntegral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(integrate_beta_entropy(7, 3));
}
BENCHMARK(BM_BetaEntropyIntegral);

}  // namespace
