#include <benchmark/benchmark.h>

#include "holoperiod/cycle.hpp"
#include "holoperiod/quadring.hpp"
#include "holoperiod/recurrence.hpp"
#include "holoperiod/theory.hpp"

using namespace holoperiod;

namespace {

const Recurrence& family11() {
  static const Recurrence rec = family_recurrence({1, 1});
  return rec;
}

void BM_EvalMod(benchmark::State& state) {
  std::uint64_t m = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_mod(family11(), m, 100000));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_EvalMod)->Arg(97)->Arg(3617)->Arg((1 << 20) + 7);

void BM_DetectPeriod(benchmark::State& state) {
  std::uint64_t m = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(detect_period(family11(), m).period);
}
BENCHMARK(BM_DetectPeriod)->Arg(97)->Arg(293)->Arg(3617)
    ->Unit(benchmark::kMillisecond);

void BM_FastPeriod(benchmark::State& state) {
  std::uint64_t m = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(fast_period(m).result.period);
}
BENCHMARK(BM_FastPeriod)->Arg(97)->Arg(293)->Arg(3617)
    ->Unit(benchmark::kMillisecond);

void BM_VerifyPeriod(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        verify_period(family11(), 3617, 26158144, 14468, 1 << 20));
  state.SetItemsProcessed(state.iterations() * (1 << 20));
}
BENCHMARK(BM_VerifyPeriod)->Unit(benchmark::kMillisecond);

void BM_FallingProduct(benchmark::State& state) {
  std::uint64_t p = 49999;  // prime, 4 mod 5
  QuadRing ring(1, 1, p * p);
  for (auto _ : state) benchmark::DoNotOptimize(falling_product(ring, 2 * p));
  state.SetItemsProcessed(state.iterations() * 2 * p);
}
BENCHMARK(BM_FallingProduct);

void BM_BnRingOracle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(bn_ring_oracle(2000, 9973, {1, 1}));
}
BENCHMARK(BM_BnRingOracle);

void BM_WieferichScan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wieferich_search(state.range(0), 1).hits.size());
}
BENCHMARK(BM_WieferichScan)->Arg(10000)->Arg(50000)
    ->Unit(benchmark::kMillisecond);

void BM_FactorialCongruence(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_factorial_congruence(3, state.range(0)));
}
BENCHMARK(BM_FactorialCongruence)->Arg(3)->Arg(5);

void BM_MinimalWordPeriod(benchmark::State& state) {
  std::vector<std::uint64_t> word;
  word.reserve(1 << 20);
  for (std::size_t i = 0; i < (1 << 20); ++i) word.push_back(i % 12347);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_word_period(word));
  state.SetItemsProcessed(state.iterations() * word.size());
}
BENCHMARK(BM_MinimalWordPeriod);

}  // namespace

BENCHMARK_MAIN();
