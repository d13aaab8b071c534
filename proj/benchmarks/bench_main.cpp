#include <benchmark/benchmark.h>

#include "etaq/enumerate.hpp"
#include "etaq/hecke.hpp"
#include "etaq/qseries.hpp"
#include "etaq/table.hpp"
#include "etaq/verify.hpp"

namespace {

using namespace etaq;

void BM_Expansion(benchmark::State& state) {
  const auto e = EtaQuotient::parse(4, "1^{-6}2^{17}4^{-7}");
  const auto B = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eta_quotient_expansion(e, B));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Expansion)->RangeMultiplier(2)->Range(250, 4000)->Complexity();

void BM_BinomialProduct(benchmark::State& state) {
  const auto B = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(multiply(binomial_factor(1, -6, B), binomial_factor(2, 17, B)), binomial_factor(4, -7, B)));
  }
}
BENCHMARK(BM_BinomialProduct)->Arg(500)->Arg(2000);

void BM_ClosedCoefficient(benchmark::State& state) {
  const auto& row = load_table()[43];
  std::int64_t l = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_coefficient(HeckeContext(row.entry, l)));
    l = l > 100000 ? 1 : l + row.m_r;
  }
}
BENCHMARK(BM_ClosedCoefficient);

void BM_VerifyEntry(benchmark::State& state) {
  const auto& row = load_table()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(verify_entry(row, 500));
}
BENCHMARK(BM_VerifyEntry)->Arg(0)->Arg(5)->Arg(43)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_entries(load_table(), 500, 1));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

void BM_EnumerateLevel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_level({.level = state.range(0)}));
}
BENCHMARK(BM_EnumerateLevel)->Arg(4)->Arg(12)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
