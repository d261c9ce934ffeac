#include "command.hpp"

#include <geocheck/confocal.hpp>
#include <geocheck/error.hpp>
#include <geocheck/random.hpp>

#include <cmath>
#include <memory>
#include <numbers>

namespace geocheck::cli {

namespace {

using namespace geocheck::confocal;
constexpr double kPi = std::numbers::pi;

struct FamilyArgs {
  double a = 2.0;
  double b = 1.0;
  int count = 100;
};

void add_family_options(CLI::App* sub, FamilyArgs& f, const char* count_help) {
  sub->add_option("--a", f.a, "Semi-major axis of the reference ellipse")->check(CLI::PositiveNumber);
  sub->add_option("--b", f.b, "Semi-minor axis of the reference ellipse")->check(CLI::PositiveNumber);
  sub->add_option("--count", f.count, count_help)->check(CLI::Range(1, 1'000'000));
}

Vec2 on_member(const ConfocalFamily& f, double lambda, double t) {
  return {std::sqrt(f.a() * f.a() + lambda) * std::cos(t), std::sqrt(f.b() * f.b() + lambda) * std::sin(t)};
}

std::vector<Vec2> member_outline(const ConfocalFamily& f, double lambda, int n = 256) {
  std::vector<Vec2> pts;
  for (int i = 0; i < n; ++i) pts.push_back(on_member(f, lambda, 2 * kPi * i / n));
  return pts;
}

/// Branch of hyperbola member λ in the quadrant given by the signs.
std::vector<Vec2> hyperbola_branch(const ConfocalFamily& f, double lambda, int sx, double extent, int n = 128) {
  std::vector<Vec2> pts;
  const double ha = std::sqrt(f.a() * f.a() + lambda), hb = std::sqrt(-(f.b() * f.b() + lambda));
  const double tmax = std::asinh(extent / hb);
  for (int i = 0; i <= n; ++i) {
    const double t = -tmax + 2 * tmax * i / n;
    pts.emplace_back(sx * ha * std::cosh(t), hb * std::sinh(t));
  }
  return pts;
}

Report run_ivory(const FamilyArgs& args, const Globals& g, Svg* fig) {
  Report r("ivory", "Ivory's lemma on a confocal net");
  r.inputs()["axes"] = {args.a, args.b};
  r.inputs()["count"] = args.count;
  const ConfocalFamily f(args.a, args.b);
  const double a2 = args.a * args.a, b2 = args.b * args.b;
  Rng rng = make_stream(g.seed, 0);
  double worst = 0.0;
  for (int i = 0; i < args.count; ++i) {
    const double e1 = uniform(rng, -0.9 * b2, 3 * a2), e2 = uniform(rng, -0.9 * b2, 3 * a2);
    const double h1 = uniform(rng, -a2 + 0.05 * (a2 - b2), -b2 - 0.05 * (a2 - b2));
    const double h2 = uniform(rng, -a2 + 0.05 * (a2 - b2), -b2 - 0.05 * (a2 - b2));
    const IvoryQuadrilateral q = ivory_quadrilateral(f, e1, e2, h1, h2, 1 + i % 4);
    worst = std::max(worst, std::abs(q.diagonal_1 - q.diagonal_2));
    if (fig && i == 0) {
      Svg::Style d;
      d.stroke = "firebrick";
      fig->line(q.vertex[0][0], q.vertex[1][1], d);
      fig->line(q.vertex[0][1], q.vertex[1][0], d);
    }
  }
  r.outputs()["max_diagonal_difference"] = worst;
  r.check_residual("diagonal difference / (a+b)", worst / f.scale(), g.bound(1e-9));
  if (fig) {
    Svg::Style s;
    s.width = 0.5;
    for (double l : {-0.5 * b2, 0.0, 0.5 * a2, 1.5 * a2}) fig->polyline(member_outline(f, l), s, true);
    const double extent = 2.0 * std::sqrt(2.5 * a2);
    for (double frac : {0.2, 0.5, 0.8}) {
      const double l = -a2 + frac * (a2 - b2);
      for (int sx : {-1, 1}) fig->polyline(hyperbola_branch(f, l, sx, extent), s, false);
    }
  }
  return r;
}

Report run_chasles(const FamilyArgs& args, const Globals& g, Svg* fig) {
  Report r("chasles", "tangents to confocal conics");
  r.inputs()["axes"] = {args.a, args.b};
  r.inputs()["count"] = args.count;
  const ConfocalFamily f(args.a, args.b);
  const double a2 = args.a * args.a, b2 = args.b * args.b;
  Rng rng = make_stream(g.seed, 0);
  double hyper = 0.0, pitot = 0.0, incircle = 0.0, excircle = 0.0;
  int inscribed = 0;
  bool hyperbola_members = true;
  bool drawn = false;
  for (int i = 0; i < args.count; ++i) {
    const double lo = uniform(rng, 0.2 * a2, 2 * a2);
    const double li = uniform(rng, -0.9 * b2, lo - 0.1 * b2);
    const Vec2 pa = on_member(f, lo, uniform(rng, 0, 2 * kPi));
    const Vec2 pb = on_member(f, lo, uniform(rng, 0, 2 * kPi));
    const ChaslesReport c = chasles_reye(f, lo, li, pa, pb);
    hyper = std::max(hyper, c.hyperbola_defect);
    incircle = std::max(incircle, c.incircle_defect);
    hyperbola_members = hyperbola_members && f.is_hyperbola(c.lambda_h_c) && f.is_hyperbola(c.lambda_h_d);
    if (c.inscribed) {
      ++inscribed;
      pitot = std::max(pitot, c.pitot_defect);
    } else {
      excircle = std::max(excircle, c.excircle_defect);
    }
    if (fig && c.inscribed && !drawn) {
      drawn = true;
      Svg::Style s;
      fig->polyline(member_outline(f, lo), s, true);
      fig->polyline(member_outline(f, li), s, true);
      Svg::Style q;
      q.stroke = "steelblue";
      fig->polyline({c.a, c.c, c.b, c.d}, q, true);
      Svg::Style k;
      k.stroke = "firebrick";
      fig->circle(c.incenter, c.inradius, k);
      for (const auto& [p, name] : {std::pair{c.a, "A"}, {c.b, "B"}, {c.c, "C"}, {c.d, "D"}}) {
        fig->dot(p, "black");
        fig->label(p, name);
      }
    }
  }
  r.outputs()["inscribed"] = inscribed;
  r.outputs()["excircle"] = args.count - inscribed;
  r.check_residual("C and D on one confocal hyperbola", hyper, g.bound(1e-9));
  r.check_flag("C and D parameters are hyperbola members", hyperbola_members);
  r.check_residual("circle tangent to all four sides", incircle, g.bound(1e-8));
  r.check_residual("Pitot defect on inscribed quadrilaterals", pitot, g.bound(1e-9));
  r.check_residual("excircle defect on the remaining quadrilaterals", excircle, g.bound(1e-9));
  return r;
}

Report run_caustic(const FamilyArgs& args, double lambda_table, const Globals& g, Svg* fig) {
  Report r("caustic", "billiards in an ellipse");
  r.inputs()["axes"] = {args.a, args.b};
  r.inputs()["bounces"] = args.count;
  r.inputs()["table"] = lambda_table;
  const ConfocalFamily f(args.a, args.b);
  Rng rng = make_stream(g.seed, 0);
  BilliardState s{on_member(f, lambda_table, uniform(rng, 0, 2 * kPi)), Vec2::Zero()};
  const double sa = 0.25 * args.a, sb = 0.25 * args.b;
  s.direction = (Vec2(uniform(rng, -sa, sa), uniform(rng, -sb, sb)) - s.point).normalized();
  std::vector<Vec2> path{s.point};
  std::vector<double> cs;
  double on_table = 0.0;
  for (int k = 0; k < args.count; ++k) {
    s = billiard_step(f, s, lambda_table);
    path.push_back(s.point);
    on_table = std::max(on_table, std::abs(f.member_residual(lambda_table, s.point)));
    cs.push_back(caustic_parameter(f, line_through(s.point, s.direction)));
  }
  double mean = 0, var = 0;
  for (double c : cs) mean += c;
  mean /= static_cast<double>(cs.size());
  for (double c : cs) var += (c - mean) * (c - mean);
  const double sd = std::sqrt(var / static_cast<double>(cs.size()));
  r.outputs()["caustic_lambda"] = mean;
  r.outputs()["caustic_kind"] = f.is_ellipse(mean) ? "ellipse" : "hyperbola";
  r.check_residual("bounce points on the table", on_table, g.bound(1e-12));
  r.check_residual("standard deviation of the caustic parameter / (a+b)^2", sd / (f.scale() * f.scale()),
                   g.bound(1e-9));
  if (fig) {
    Svg::Style t;
    fig->polyline(member_outline(f, lambda_table), t, true);
    Svg::Style p;
    p.stroke = "steelblue";
    p.width = 0.5;
    fig->polyline(path, p, false);
    Svg::Style c;
    c.stroke = "firebrick";
    c.dashed = true;
    if (f.is_ellipse(mean)) {
      fig->polyline(member_outline(f, mean), c, true);
    } else {
      for (int sx : {-1, 1}) fig->polyline(hyperbola_branch(f, mean, sx, args.b), c, false);
    }
  }
  return r;
}

}  // namespace

void add_confocal_commands(CLI::App& app, Registry& reg) {
  {
    auto a = std::make_shared<FamilyArgs>();
    CLI::App* sub = add_subcommand(app, "ivory", "Equal diagonals of confocal quadrilaterals");
    add_family_options(sub, *a, "Random quadrilaterals");
    reg.push_back({sub, [=](const Globals& g, Svg* fig) { return run_ivory(*a, g, fig); }});
  }
  {
    auto a = std::make_shared<FamilyArgs>();
    CLI::App* sub = add_subcommand(app, "chasles", "Quadrilaterals cut out by tangents to a confocal conic");
    add_family_options(sub, *a, "Random configurations");
    reg.push_back({sub, [=](const Globals& g, Svg* fig) { return run_chasles(*a, g, fig); }});
  }
  {
    auto a = std::make_shared<FamilyArgs>();
    auto table = std::make_shared<double>(0.0);
    CLI::App* sub = add_subcommand(app, "caustic", "Invariant caustic of an elliptic billiard trajectory");
    add_family_options(sub, *a, "Number of bounces");
    sub->add_option("--table", *table, "Confocal parameter of the table ellipse");
    reg.push_back({sub, [=](const Globals& g, Svg* fig) {
                     const ConfocalFamily f(a->a, a->b);
                     if (!f.is_ellipse(*table)) {
                       throw Error(ErrorKind::kInvalidArgument, "--table must select an ellipse member");
                     }
                     return run_caustic(*a, *table, g, fig);
                   }});
  }
}

}  // namespace geocheck::cli
