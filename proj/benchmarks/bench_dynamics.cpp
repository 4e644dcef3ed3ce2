#include <benchmark/benchmark.h>

#include "opdyn/analysis.hpp"
#include "opdyn/dynamics.hpp"
#include "opdyn/generators.hpp"
#include "opdyn/spectral.hpp"

namespace {

using namespace opdyn;

void BM_StepMajorityER(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_er(n, 10.0 / static_cast<double>(n), 1);
  const Coloring c = random_coloring(n, 0.5, 2);
  Coloring out(n);
  const ModelConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(step_into(g, c, config, out));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * g.num_edges()));
}
BENCHMARK(BM_StepMajorityER)->Arg(10000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMicrosecond);

void BM_StepPsiInfluence(benchmark::State& state) {
  const std::size_t n = 100000;
  const Graph g = gen_pa(n, 5, 1);
  const Coloring c = random_coloring(n, 0.5, 2);
  ModelConfig config = ModelConfig::psi(Rational(7, 10), Rational(4, 5));
  config.influence.assign(n, 1);
  for (std::size_t v = 0; v < n; v += 100) config.influence[v] = 16;
  Coloring out(n);
  for (auto _ : state) benchmark::DoNotOptimize(step_into(g, c, config, out));
}
BENCHMARK(BM_StepPsiInfluence)->Unit(benchmark::kMicrosecond);

void BM_RunCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_cycle(n);
  const Coloring c = random_coloring(n, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(run(g, c, {}).stabilization_time);
}
BENCHMARK(BM_RunCycle)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_RunSparseER(benchmark::State& state) {
  const std::size_t n = 100000;
  const Graph g = gen_er(n, 12.0 / n, 4);
  const Coloring c = random_coloring(n, 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(run(g, c, {}).stabilization_time);
}
BENCHMARK(BM_RunSparseER)->Unit(benchmark::kMillisecond);

void BM_EliteScanPA(benchmark::State& state) {
  const Graph g = gen_pa(20000, 13, 1);
  EliteQuery q;
  q.influence = 16;
  for (auto _ : state) benchmark::DoNotOptimize(scan_winning_elite(g, q, 1.0 / 20000, ScanStrategy::GallopThenLinear));
}
BENCHMARK(BM_EliteScanPA)->Unit(benchmark::kMillisecond);

void BM_SigmaRRG(benchmark::State& state) {
  const Graph g = gen_rrg(static_cast<std::size_t>(state.range(0)), 16, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sigma(g));
}
BENCHMARK(BM_SigmaRRG)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace
