#include <geocheck/discrete/finite_plane.hpp>
#include <geocheck/discrete/flux.hpp>
#include <geocheck/frame.hpp>
#include <geocheck/fta/resultant.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace geocheck;

void BM_BuildAndValidatePlane(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const discrete::Deck deck = discrete::deck_from_plane(discrete::build_plane(q));
    benchmark::DoNotOptimize(discrete::validate_deck(deck).valid());
  }
}
BENCHMARK(BM_BuildAndValidatePlane)->Arg(3)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

/// Designs and solves every p/q divider with denominator q.
void BM_DividerDesigns(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int p = 1; p < q; ++p) {
      const discrete::DividerDesign d = discrete::design_divider_network(p, q);
      benchmark::DoNotOptimize(discrete::solve_flux(d.network));
    }
  }
}
BENCHMARK(BM_DividerDesigns)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_NailWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const frame::ReducedWord w = frame::nail_word(n, frame::NailScheme::kBalanced);
    for (int nail = 1; nail <= n; ++nail) benchmark::DoNotOptimize(frame::drop_nail(w, nail).is_identity());
  }
}
BENCHMARK(BM_NailWord)->DenseRange(2, 10, 2);

/// Exact discriminant of a dense integer polynomial of the given degree.
void BM_ExactDiscriminant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> c;
  for (std::size_t k = 0; k <= n; ++k) c.push_back(make_rational(static_cast<long long>(3 * k % 7) - 3));
  c.back() = 1;
  const fta::RationalPoly p(c);
  for (auto _ : state) benchmark::DoNotOptimize(fta::discriminant(p));
}
BENCHMARK(BM_ExactDiscriminant)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
