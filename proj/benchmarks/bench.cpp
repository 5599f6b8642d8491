#include <benchmark/benchmark.h>

#include <random>

#include "gtoda/aks.hpp"
#include "gtoda/determinant.hpp"
#include "gtoda/lax.hpp"
#include "gtoda/spectral.hpp"
#include "gtoda/toda_sim.hpp"

using namespace gtoda;

static UEAElement random_word(int n, int len, std::mt19937_64& rng) {
  const auto& table = generator_table(n);
  std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
  std::vector<GenIndex> w(static_cast<std::size_t>(len));
  for (auto& g : w) g = static_cast<GenIndex>(pick(rng));
  return UEAElement::from_word(n, w);
}

static void BM_NcMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<std::pair<UEAElement, UEAElement>> pairs;
  for (int k = 0; k < 64; ++k) pairs.emplace_back(random_word(n, 4, rng), random_word(n, 4, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(nc_mul(a, b));
  }
}
BENCHMARK(BM_NcMul)->Arg(2)->Arg(3)->Arg(4);

static void BM_ClassicalCharpoly(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classical_charpoly(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassicalCharpoly)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_QuantumCharpoly(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(quantum_charpoly(static_cast<int>(state.range(0)), static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_QuantumCharpoly)->Args({2, 1})->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_DetAntisym(benchmark::State& state) {
  const auto pencil = assemble_pencil(build_full_lax_quantum(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(det_nc_antisym(pencil));
}
BENCHMARK(BM_DetAntisym)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_QuantumCommutativity(benchmark::State& state) {
  const auto family = quantum_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_commutativity(family));
}
BENCHMARK(BM_QuantumCommutativity)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_OpenChain(benchmark::State& state) {
  OpenChainState s0{{0.1, -0.3, 0.2}, {0.5, -0.1, 0.0}, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(integrate_open_chain(s0, 1e-3, 10.0, 100));
}
BENCHMARK(BM_OpenChain)->Unit(benchmark::kMillisecond);

static void BM_KKFlow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const KKFlow flow(delta_coefficient(n, 0, 1));
  BorelPoint p(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) p.at(i, j) = 0.1 * (i - j + 1);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_kk_flow(flow, p, 1e-3, 1.0, 100));
}
BENCHMARK(BM_KKFlow)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
