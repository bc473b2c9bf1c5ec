#include <benchmark/benchmark.h>

#include "jtk/ideals/ideals.hpp"
#include "jtk/jordan/checks.hpp"
#include "jtk/kernels/kernels.hpp"
#include "jtk/ktype/ktype.hpp"
#include "jtk/localize/localize.hpp"

using namespace jtk;

namespace {

const char* kTriples[] = {"matrix:2x2", "matrix:2x3", "sym:2", "asym:4", "spin:3", "spin:4"};

void BM_Axioms(benchmark::State& state) {
  auto t = JordanTriple::parse(kTriples[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(axioms_check(*t).ok);
  state.SetLabel(t->descriptor());
}
BENCHMARK(BM_Axioms)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

// Truncations are cached, so this times the per-degree K-type comparison.
void BM_TheoremI(benchmark::State& state) {
  auto t = JordanTriple::parse("matrix:2x3");
  Partition lam({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(theorem_i_check(*t, lam, static_cast<unsigned>(state.range(0))).ok);
}
BENCHMARK(BM_TheoremI)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_FiberOrigin(benchmark::State& state) {
  auto t = JordanTriple::parse("matrix:2x3");
  Partition lam({2, 1});
  Vec zero(t->dim());
  for (auto _ : state) benchmark::DoNotOptimize(fiber(*t, lam, zero, static_cast<unsigned>(state.range(0))).fiber_dim);
}
BENCHMARK(BM_FiberOrigin)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_FiberRegular(benchmark::State& state) {
  auto t = JordanTriple::parse("matrix:2x3");
  Partition lam({2, 1});
  Rng rng(1);
  Vec z = stratum_points(*t, t->rank(), 1, rng).front();
  for (auto _ : state) benchmark::DoNotOptimize(fiber(*t, lam, z, 6).fiber_dim);
}
BENCHMARK(BM_FiberRegular)->Unit(benchmark::kMillisecond);

void BM_TheoremW(benchmark::State& state) {
  auto t = JordanTriple::parse("matrix:2x3");
  Partition lam({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(theorem_w_check(t, lam, static_cast<unsigned>(state.range(0)), 6).ok());
}
BENCHMARK(BM_TheoremW)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_DeltaPower(benchmark::State& state) {
  auto delta = delta_kernel(JordanTriple::parse("matrix:2x2"));
  for (auto _ : state)
    benchmark::DoNotOptimize(delta_power_series(delta, Rational(1, 2), static_cast<unsigned>(state.range(0))).is_hermitian());
}
BENCHMARK(BM_DeltaPower)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Binomial(benchmark::State& state) {
  auto t = JordanTriple::parse("spin:4");
  for (auto _ : state) benchmark::DoNotOptimize(binomial_check(t, Rational(2), 3).ok);
}
BENCHMARK(BM_Binomial)->Unit(benchmark::kMillisecond);

void BM_CrossSection(benchmark::State& state) {
  auto t = JordanTriple::parse("matrix:2x3");
  for (auto _ : state) {
    Rng rng(1);
    benchmark::DoNotOptimize(cross_section_check(t, Partition({1, 1}), 1, rng).status);
  }
}
BENCHMARK(BM_CrossSection)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
