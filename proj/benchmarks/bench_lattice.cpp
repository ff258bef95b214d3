#include <benchmark/benchmark.h>

#include "majlat/checks.hpp"
#include "majlat/coupling.hpp"
#include "majlat/lattice.hpp"
#include "majlat/sweep.hpp"

namespace {

using namespace majlat;

std::pair<OrderedPmf, OrderedPmf> pair_of_size(std::size_t n) {
  const SimplexSampler sampler(12345);
  return {sampler.sample(n, 0), sampler.sample(n, 1)};
}

void BM_Meet(benchmark::State& state) {
  const auto [p, q] = pair_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(meet(p, q));
}
BENCHMARK(BM_Meet)->Range(8, 4096);

void BM_Join(benchmark::State& state) {
  const auto [p, q] = pair_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(join(p, q));
}
BENCHMARK(BM_Join)->Range(8, 4096);

void BM_ComonotoneCoupling(benchmark::State& state) {
  const auto [p, q] = pair_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(comonotone_coupling(p, q));
}
BENCHMARK(BM_ComonotoneCoupling)->Range(8, 4096);

void BM_SortedIndependent(benchmark::State& state) {
  const auto [p, q] = pair_of_size(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sorted_mass_vector(independent_coupling(p, q)));
}
BENCHMARK(BM_SortedIndependent)->Range(8, 64);

void BM_RenyiEntropy(benchmark::State& state) {
  const auto [p, q] = pair_of_size(state.range(0));
  const AlphaOrder alpha = AlphaOrder::of(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(renyi(p, alpha));
}
BENCHMARK(BM_RenyiEntropy)->Range(8, 4096);

void BM_SupermodGap(benchmark::State& state) {
  const auto [p, q] = pair_of_size(state.range(0));
  const AlphaOrder alpha = AlphaOrder::of(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(delta_supermod(p, q, alpha, Family::renyi));
}
BENCHMARK(BM_SupermodGap)->Range(8, 1024);

void BM_SubaddSweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.n = 6;
  cfg.predicates = {Pred::subadd};
  cfg.alpha_grid = {AlphaOrder::zero(), AlphaOrder::of(0.5),
                    AlphaOrder::one(), AlphaOrder::of(2.0)};
  cfg.samples = state.range(0);
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_verify(cfg));
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_SubaddSweep)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
