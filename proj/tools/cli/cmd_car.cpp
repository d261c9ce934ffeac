#include "command.hpp"

#include <geocheck/car.hpp>
#include <geocheck/random.hpp>

#include <cmath>
#include <memory>

namespace geocheck::cli {

namespace {

using namespace geocheck::car;

Report run_park(double wheelbase, double h, double t, int states, const Globals& g) {
  Report r("park", "car Lie brackets");
  r.inputs()["wheelbase"] = wheelbase;
  r.inputs()["h"] = h;
  r.inputs()["t"] = t;
  r.inputs()["states"] = states;
  Rng rng = make_stream(g.seed, 0);
  double worst_turn = 0.0, worst_park = 0.0, min_witness = 1e300;
  for (int i = 0; i < states; ++i) {
    const CarState s{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -3.14159, 3.14159),
                     uniform(rng, -0.6, 0.6)};
    auto rel = [](const Vec4& a, const Vec4& b) { return (a - b).norm() / std::max(1.0, b.norm()); };
    worst_turn = std::max(worst_turn, rel(lie_bracket_numeric(steer_field(), drive_field(wheelbase), s, h),
                                          turn(s, wheelbase)));
    worst_park = std::max(worst_park, rel(lie_bracket_numeric(drive_field(wheelbase), turn_field(wheelbase), s, h),
                                          park(s, wheelbase)));
    min_witness = std::min(min_witness, frobenius_witness(s, wheelbase).residual);
  }
  r.check_residual("[steer, drive] vs turn, relative", worst_turn, g.bound(1e-6));
  r.check_residual("[drive, turn] vs park, relative", worst_park, g.bound(1e-6));
  r.outputs()["min_frobenius_residual"] = min_witness;
  r.check_flag("turn leaves span{steer, drive}", min_witness > 1e-3);

  const CarState start{};
  const Vec4 disp = commutator_flow(drive_field(wheelbase), turn_field(wheelbase), t, start).vec() - start.vec();
  const Vec4 expected = t * t * park(start, wheelbase);
  const Vec4 half =
      commutator_flow(drive_field(wheelbase), turn_field(wheelbase), t / 2, start).vec() - start.vec();
  r.outputs()["commutator_displacement"] = {disp[0], disp[1], disp[2], disp[3]};
  r.outputs()["t2_park"] = {expected[0], expected[1], expected[2], expected[3]};
  r.outputs()["halving_ratio"] = disp.norm() / half.norm();
  r.check_residual("commutator displacement vs t^2 park, relative", (disp - expected).norm() / expected.norm(), 0.02);
  r.check_residual("displacement ratio under t -> t/2, distance from 4", std::abs(disp.norm() / half.norm() - 4.0),
                   0.1);
  return r;
}

}  // namespace

void add_car_commands(CLI::App& app, Registry& reg) {
  auto wheelbase = std::make_shared<double>(1.0);
  auto h = std::make_shared<double>(1e-4);
  auto t = std::make_shared<double>(1e-2);
  auto states = std::make_shared<int>(100);
  CLI::App* sub = add_subcommand(app, "park", "Parallel parking as a Lie bracket of drive and turn");
  sub->add_option("--wheelbase", *wheelbase, "Axle distance")->check(CLI::PositiveNumber);
  sub->add_option("--step", *h, "Finite-difference step")->check(CLI::PositiveNumber);
  sub->add_option("--t", *t, "Manoeuvre time per leg")->check(CLI::PositiveNumber);
  sub->add_option("--states", *states, "Random states for the bracket check")->check(CLI::Range(1, 1'000'000));
  reg.push_back({sub, [=](const Globals& g, Svg* fig) {
                   reject_figure(fig, "park");
                   return run_park(*wheelbase, *h, *t, *states, g);
                 }});
}

}  // namespace geocheck::cli
