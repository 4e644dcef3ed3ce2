#include <benchmark/benchmark.h>

#include <cmath>

#include "opdyn/generators.hpp"

namespace {

using namespace opdyn;

void BM_GenER(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_er(n, 10.0 / static_cast<double>(n), 1).num_edges());
}
BENCHMARK(BM_GenER)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_GenRRG(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_rrg(100000, d, 1).num_edges());
}
BENCHMARK(BM_GenRRG)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GenPA(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gen_pa(100000, 5, 1).num_edges());
}
BENCHMARK(BM_GenPA)->Unit(benchmark::kMillisecond);

void BM_GenHRGFixedRadius(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_hrg_fixed_radius(n, 2.0 * std::log(static_cast<double>(n)), 2.5, 0.6, 1).num_edges());
}
BENCHMARK(BM_GenHRGFixedRadius)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
