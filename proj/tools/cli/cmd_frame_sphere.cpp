#include "command.hpp"

#include <geocheck/error.hpp>
#include <geocheck/frame.hpp>
#include <geocheck/random.hpp>
#include <geocheck/sphere.hpp>

#include <cmath>
#include <memory>

namespace geocheck::cli {

namespace {

Report run_frame(int n_min, int n_max, const std::string& scheme) {
  Report r("frame", "picture hanging words");
  r.inputs()["n_min"] = n_min;
  r.inputs()["n_max"] = n_max;
  r.inputs()["scheme"] = scheme;
  std::vector<std::pair<std::string, frame::NailScheme>> schemes;
  if (scheme != "balanced") schemes.emplace_back("left-nested", frame::NailScheme::kLeftNested);
  if (scheme != "left-nested") schemes.emplace_back("balanced", frame::NailScheme::kBalanced);
  Json words = Json::array();
  for (const auto& [name, s] : schemes) {
    for (int n = n_min; n <= n_max; ++n) {
      const frame::ReducedWord w = frame::nail_word(n, s);
      Json entry = {{"scheme", name}, {"n", n}, {"length", w.length()}};
      if (w.length() <= 40) entry["word"] = w.str();
      words.push_back(entry);
      const std::string tag = name + " n=" + std::to_string(n);
      r.check_flag(tag + " word is nontrivial", !w.is_identity());
      int standing = 0;
      for (int nail = 1; nail <= n; ++nail) {
        if (!frame::drop_nail(w, nail).is_identity()) ++standing;
      }
      r.check_exact(tag + " nails whose removal leaves the frame hanging", standing, 0);
      if (s == frame::NailScheme::kLeftNested) {
        r.check_exact(tag + " length", static_cast<long long>(w.length()), 3LL * (1LL << (n - 1)) - 2);
      }
    }
  }
  r.outputs()["words"] = words;
  return r;
}

sphere::ExactVec3 random_exact(Rng& rng) {
  sphere::ExactVec3 v;
  for (auto& c : v) {
    c = make_rational(static_cast<long long>(std::floor(uniform(rng, -50, 51))),
                      static_cast<long long>(std::floor(uniform(rng, 1, 20))));
  }
  return v;
}

Report run_sphere(int trials, const Globals& g) {
  Report r("sphere", "spherical triangle concurrency");
  r.inputs()["trials"] = trials;
  Rng rng = make_stream(g.seed, 0);
  bool jacobi_zero = true, median_zero = true;
  for (int i = 0; i < trials; ++i) {
    const auto a = random_exact(rng), b = random_exact(rng), c = random_exact(rng);
    const Rational zero(0);
    for (const auto& x : sphere::jacobi_sum_exact(a, b, c)) jacobi_zero = jacobi_zero && x == zero;
    for (const auto& x : sphere::median_sum_exact(a, b, c)) median_zero = median_zero && x == zero;
  }
  r.check_flag("altitude pole sum is exactly zero on rational triangles", jacobi_zero);
  r.check_flag("median pole sum is exactly zero on rational triangles", median_zero);
  double worst_alt = 0.0, worst_med = 0.0;
  int skipped = 0;
  for (int i = 0; i < trials; ++i) {
    try {
      const sphere::SphericalTriangle t(random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng));
      worst_alt = std::max(worst_alt, sphere::concurrency_check(t, sphere::CevianKind::kAltitudes).residual);
      worst_med = std::max(worst_med, sphere::concurrency_check(t, sphere::CevianKind::kMedians).residual);
    } catch (const Error&) {
      ++skipped;  // degenerate draw
    }
  }
  r.outputs()["degenerate_draws"] = skipped;
  r.outputs()["max_altitude_det"] = worst_alt;
  r.outputs()["max_median_det"] = worst_med;
  r.check_residual("altitudes |det(poles)|", worst_alt, g.bound(1e-12));
  r.check_residual("medians |det(poles)|", worst_med, g.bound(1e-12));
  return r;
}

Report run_tent(double radius, double leg, int count, const Globals& g) {
  Report r("tent", "walk south, west, north");
  r.inputs()["radius_km"] = radius;
  r.inputs()["leg_km"] = leg;
  r.inputs()["count"] = count;
  const sphere::TentLocus locus = sphere::tent_locus(radius, leg, count);
  r.outputs()["locus"] = Json::parse(sphere::to_json(locus).dump());
  r.check_residual("north pole closure (km)", sphere::verify_walk({std::acos(-1.0) / 2, 0.0, radius}, leg),
                   g.bound(1e-6));
  double worst = 0.0;
  for (double lat : locus.latitudes) worst = std::max(worst, sphere::verify_walk({lat, 0.3, radius}, leg));
  r.check_residual("southern circles closure (km), k = 1.." + std::to_string(locus.latitudes.size()), worst,
                   g.bound(1e-6));
  return r;
}

}  // namespace

void add_frame_sphere_commands(CLI::App& app, Registry& reg) {
  {
    auto n_min = std::make_shared<int>(2);
    auto n_max = std::make_shared<int>(6);
    auto scheme = std::make_shared<std::string>("both");
    CLI::App* sub = add_subcommand(app, "frame", "Picture-hanging words that fall when any nail is removed");
    sub->add_option("--n-min", *n_min, "Smallest number of nails")->check(CLI::Range(1, 16));
    sub->add_option("--n-max", *n_max, "Largest number of nails")->check(CLI::Range(1, 16));
    sub->add_option("--scheme", *scheme, "left-nested, balanced or both")
        ->check(CLI::IsMember({"left-nested", "balanced", "both"}));
    reg.push_back({sub, [=](const Globals&, Svg* fig) {
                     reject_figure(fig, "frame");
                     if (*n_min > *n_max) throw Error(ErrorKind::kInvalidArgument, "--n-min exceeds --n-max");
                     return run_frame(*n_min, *n_max, *scheme);
                   }});
  }
  {
    auto trials = std::make_shared<int>(1000);
    CLI::App* sub = add_subcommand(app, "sphere", "Concurrency of altitudes and medians of spherical triangles");
    sub->add_option("--trials", *trials, "Random triangles")->check(CLI::Range(1, 10'000'000));
    reg.push_back({sub, [=](const Globals& g, Svg* fig) {
                     reject_figure(fig, "sphere");
                     return run_sphere(*trials, g);
                   }});
  }
  {
    auto radius = std::make_shared<double>(sphere::kEarthRadiusKm);
    auto leg = std::make_shared<double>(10.0);
    auto count = std::make_shared<int>(10);
    CLI::App* sub = add_subcommand(app, "tent", "Starting points of a closed south-west-north walk");
    sub->add_option("--radius", *radius, "Sphere radius in km")->check(CLI::PositiveNumber);
    sub->add_option("--leg", *leg, "Length of each leg in km")->check(CLI::PositiveNumber);
    sub->add_option("--count", *count, "Number of southern solution circles")->check(CLI::Range(1, 100000));
    reg.push_back({sub, [=](const Globals& g, Svg* fig) {
                     reject_figure(fig, "tent");
                     return run_tent(*radius, *leg, *count, g);
                   }});
  }
}

}  // namespace geocheck::cli
