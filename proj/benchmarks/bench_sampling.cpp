#include <geocheck/integral.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace geocheck::integral;

void BM_TubeVolumeMonteCarlo(benchmark::State& state) {
  McOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc_tube_volume(Box(1, 2, 3), 0.3, n, 7, opts));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_TubeVolumeMonteCarlo)
    ->Args({100'000, 1})
    ->Args({1'000'000, 1})
    ->Args({1'000'000, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_CroftonArea(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crofton_area(Box(1, 1, 1), n, 3));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_CroftonArea)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_ContainmentSearch(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(containment_search(n, 11));
}
BENCHMARK(BM_ContainmentSearch)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace
