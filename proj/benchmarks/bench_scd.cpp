#include <random>

#include <benchmark/benchmark.h>

#include "scd/engine.hpp"
#include "scd/necklace.hpp"
#include "scd/oracle.hpp"

namespace {

void BM_CanonicalRotation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<scd::Word> words(256, scd::Word(n));
  for (auto& w : words) {
    for (auto& x : w) x = static_cast<scd::Label>(rng() % 3);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scd::canonical_word(words[i++ % words.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CanonicalRotation)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_EnumerateNecklaces(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    scd::for_each_necklace(2, n, [&](const scd::Word&, std::size_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["necklaces"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateNecklaces)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BuildPowerQuotient(benchmark::State& state) {
  const auto p = scd::chain_poset(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scd::build_power_quotient(p, n));
}
BENCHMARK(BM_BuildPowerQuotient)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_NaiveQuotient(benchmark::State& state) {
  const auto p = scd::chain_poset(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scd::naive_quotient(p, n));
}
BENCHMARK(BM_NaiveQuotient)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BinaryChainPower(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t chains = 0;
  for (auto _ : state) {
    const auto cert = scd::scd_chain_power_quotient(1, n);
    chains = cert.scd.chains.size();
  }
  state.counters["chains"] = static_cast<double>(chains);
}
BENCHMARK(BM_BinaryChainPower)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_GridPowerQuotient(benchmark::State& state) {
  const std::vector<std::size_t> lengths{2, 3};
  const auto grid = scd::scd_chain_product(lengths);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scd::scd_power_quotient(grid.poset, grid.scd, n));
}
BENCHMARK(BM_GridPowerQuotient)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyScd(benchmark::State& state) {
  const auto cert = scd::scd_chain_power_quotient(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scd::verify_scd(cert.poset, cert.scd));
  state.counters["elements"] = static_cast<double>(cert.poset.size());
}
BENCHMARK(BM_VerifyScd)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
