#include <geocheck/confocal.hpp>
#include <geocheck/curves/string_curve.hpp>
#include <geocheck/fta/homotopy.hpp>
#include <geocheck/pentagram.hpp>
#include <geocheck/placement.hpp>
#include <geocheck/random.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

using namespace geocheck;

void BM_HomotopyRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng = make_stream(5, 0);
  fta::ComplexPoly p;
  for (int k = 0; k <= n; ++k) p.emplace_back(uniform(rng, -1, 1), uniform(rng, -1, 1));
  p.back() /= std::abs(p.back());
  for (auto _ : state) benchmark::DoNotOptimize(fta::homotopy_roots(p, 9));
}
BENCHMARK(BM_HomotopyRoots)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

void BM_PentagramIterate(benchmark::State& state) {
  Rng rng = make_stream(5, 1);
  const pentagram::ProjPolygon start = pentagram::random_convex_polygon(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(pentagram::pentagram_map(start));
}
BENCHMARK(BM_PentagramIterate)->Arg(5)->Arg(6)->Arg(50);

void BM_ProjectiveEquivalenceSearch(benchmark::State& state) {
  Rng rng = make_stream(5, 2);
  const pentagram::ProjPolygon p = pentagram::random_convex_polygon(static_cast<std::size_t>(state.range(0)), rng);
  const pentagram::ProjPolygon t = pentagram::pentagram_map(p);
  for (auto _ : state) benchmark::DoNotOptimize(pentagram::projectively_equivalent(p, t, true));
}
BENCHMARK(BM_ProjectiveEquivalenceSearch)->Arg(5)->Arg(12);

void BM_BalanceTable(benchmark::State& state) {
  const placement::Floor floor = placement::sine_floor(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(placement::balance_square_table(floor, {}));
}
BENCHMARK(BM_BalanceTable)->Unit(benchmark::kMicrosecond);

void BM_StringCurve(benchmark::State& state) {
  const curves::SupportOval e = curves::SupportOval::ellipse(2.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(curves::string_curve(e, 0.7, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_StringCurve)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EllipticBilliard(benchmark::State& state) {
  const confocal::ConfocalFamily f(2, 1);
  for (auto _ : state) {
    confocal::BilliardState s{Vec2(2, 0), Vec2(-1, 0.3).normalized()};
    for (int k = 0; k < 1000; ++k) s = confocal::billiard_step(f, s);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_EllipticBilliard)->Unit(benchmark::kMicrosecond);

}  // namespace
