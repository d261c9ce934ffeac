#include "command.hpp"

#include <geocheck/integral.hpp>

#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

namespace geocheck::cli {

namespace {

using namespace geocheck::integral;

Json box_json(const Box& b) { return {b.a, b.b, b.c}; }

Report run_tube(std::uint64_t samples, std::uint64_t poses, unsigned threads, const Globals& g) {
  Report r("tube", "tube volume of a box");
  r.inputs()["samples"] = samples;
  r.inputs()["poses"] = poses;
  McOptions opts;
  opts.threads = threads;
  const std::vector<Box> boxes = {Box(1, 1, 1), Box(1, 2, 3), Box(0.5, 2, 0.25)};
  const std::vector<double> eps = {0.1, 0.3, 0.6};
  Json rows = Json::array();
  std::uint64_t stream = 0;
  for (const Box& b : boxes) {
    for (double e : eps) {
      const Estimate est = mc_tube_volume(b, e, samples, g.seed + 1000 * ++stream, opts);
      const double exact = tube_volume(b, e);
      rows.push_back({{"box", box_json(b)},
                      {"eps", e},
                      {"closed_form", exact},
                      {"monte_carlo", est.value},
                      {"std_error", est.std_error}});
      std::ostringstream label;
      label << "box " << b.a << "x" << b.b << "x" << b.c << ", eps " << e << ": MC deviation in standard errors";
      r.check_residual(label.str(),
                       std::abs(est.value - exact) / est.std_error, 3.0);
    }
  }
  r.outputs()["volumes"] = rows;

  const Box cube(1, 2, 3);
  const std::vector<double> grid = {0.2, 0.4, 0.6, 0.8, 1.0};
  const SteinerFit fit = fit_steiner_coefficients(cube, grid, samples, g.seed, opts);
  const double pi_l = std::numbers::pi * cube.edge_sum();
  r.outputs()["steiner_fit"] = {{"box", box_json(cube)},
                                {"linear", fit.linear},
                                {"quadratic", fit.quadratic},
                                {"cubic", fit.cubic},
                                {"quadratic_std_error", fit.quadratic_std_error},
                                {"pi_L", pi_l},
                                {"six_pi_L", 6 * pi_l}};
  r.check_flag("quadratic coefficient is nearer pi*L than 6*pi*L",
               std::abs(fit.quadratic - pi_l) < std::abs(fit.quadratic - 6 * pi_l));

  const ContainmentSearch cs = containment_search(poses, g.seed);
  r.outputs()["containment"] = {{"trials", cs.trials},
                                {"contained", cs.contained},
                                {"longer_inner", cs.longer_inner},
                                {"surface_violations", cs.surface_violations}};
  r.check_exact("contained boxes with a larger edge sum", static_cast<long long>(cs.edge_violations), 0);
  return r;
}

Report run_crofton(std::uint64_t samples, unsigned threads, const Globals& g) {
  Report r("crofton", "surface area from projections");
  r.inputs()["samples"] = samples;
  McOptions opts;
  opts.threads = threads;
  Json rows = Json::array();
  int idx = 0;
  for (const Box& b : {Box(1, 1, 1), Box(1, 2, 3)}) {
    const Estimate est = crofton_area(b, samples, g.seed + static_cast<std::uint64_t>(idx++), opts);
    rows.push_back({{"box", box_json(b)}, {"surface", b.surface()}, {"estimate", est.value}, {"std_error", est.std_error}});
    r.check_residual("relative error, box " + std::to_string(idx), std::abs(est.value - b.surface()) / b.surface(),
                     g.bound(0.01));
  }
  r.outputs()["areas"] = rows;
  return r;
}

}  // namespace

void add_integral_commands(CLI::App& app, Registry& reg) {
  {
    auto samples = std::make_shared<std::uint64_t>(200'000);
    auto poses = std::make_shared<std::uint64_t>(100'000);
    auto threads = std::make_shared<unsigned>(1);
    CLI::App* sub = add_subcommand(app, "tube", "Monte Carlo check of the tube volume of boxes");
    sub->add_option("--samples", *samples, "Samples per estimate")->check(CLI::Range(10'000ULL, 1'000'000'000ULL));
    sub->add_option("--poses", *poses, "Random poses in the containment search")->check(CLI::Range(1ULL, 100'000'000ULL));
    sub->add_option("--threads", *threads, "Worker threads (results do not depend on it)")->check(CLI::Range(1u, 256u));
    reg.push_back({sub, [=](const Globals& g, Svg* fig) {
                     reject_figure(fig, "tube");
                     return run_tube(*samples, *poses, *threads, g);
                   }});
  }
  {
    auto samples = std::make_shared<std::uint64_t>(200'000);
    auto threads = std::make_shared<unsigned>(1);
    CLI::App* sub = add_subcommand(app, "crofton", "Surface area as four times the mean projection");
    sub->add_option("--samples", *samples, "Random directions")->check(CLI::Range(10'000ULL, 1'000'000'000ULL));
    sub->add_option("--threads", *threads, "Worker threads (results do not depend on it)")->check(CLI::Range(1u, 256u));
    reg.push_back({sub, [=](const Globals& g, Svg* fig) {
                     reject_figure(fig, "crofton");
                     return run_crofton(*samples, *threads, g);
                   }});
  }
}

}  // namespace geocheck::cli
