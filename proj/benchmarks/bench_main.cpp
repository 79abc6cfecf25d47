#include "hvol/hvol.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hvol;

namespace {

Curve curve_n(int n) { return build_curve((n - 1) / 2, n % 2 ? Parity::Odd : Parity::Even); }

void BM_CyclotomicInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CycNum x = CycNum::rational(n, 1) + zeta_pow(n, 1) * Rat(3) - zeta_pow(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(x.inv());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(5)->Arg(8)->Arg(12);

void BM_IteratedClosed(benchmark::State& state) {
  const Curve c = curve_n(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (int k = 0; k < c->n; ++k) benchmark::DoNotOptimize(iterated_closed(c, 0, 2, k));
}
BENCHMARK(BM_IteratedClosed)->Arg(6)->Arg(12);

void BM_IteratedOracle(benchmark::State& state) {
  const Curve c = curve_n(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (int k = 0; k < c->n; ++k) benchmark::DoNotOptimize(iterated_oracle(c, 0, 2, k));
}
BENCHMARK(BM_IteratedOracle)->Arg(6)->Arg(10);

void BM_TheoremTable(benchmark::State& state) {
  const Curve c = curve_n(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theorem_table(c));
}
BENCHMARK(BM_TheoremTable)->Arg(6)->Arg(12);

void BM_SmithNormalForm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<std::vector<long long>> rows(m, std::vector<long long>(m));
  for (auto& r : rows)
    for (auto& x : r) x = static_cast<long long>(rng() % 21) - 10;
  const IntMatrix a = IntMatrix::from_rows(rows);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(10)->Arg(30)->Arg(60);

void BM_Tau1Hyperelliptic(benchmark::State& state) {
  const Curve c = build_curve(static_cast<int>(state.range(0)), Parity::Even);
  for (auto _ : state) benchmark::DoNotOptimize(hom_identify(c, tau1_hyperelliptic(c, 1)));
}
BENCHMARK(BM_Tau1Hyperelliptic)->Arg(2)->Arg(4);

void BM_MainTheorem(benchmark::State& state) {
  const Parity p = state.range(1) ? Parity::Even : Parity::Odd;
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(static_cast<int>(state.range(0)), p));
}
BENCHMARK(BM_MainTheorem)->Args({2, 0})->Args({2, 1})->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
