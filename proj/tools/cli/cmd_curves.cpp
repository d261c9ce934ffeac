#include "command.hpp"

#include <geocheck/curves/chords.hpp>
#include <geocheck/curves/equitangent.hpp>
#include <geocheck/curves/string_curve.hpp>
#include <geocheck/curves/support_oval.hpp>
#include <geocheck/error.hpp>
#include <geocheck/random.hpp>

#include <cmath>
#include <memory>
#include <numbers>

namespace geocheck::cli {

namespace {

using namespace geocheck::curves;
constexpr double kPi = std::numbers::pi;

std::vector<Vec2> outline(const SupportOval& o, int n = 256) {
  std::vector<Vec2> pts;
  for (int i = 0; i < n; ++i) pts.push_back(o.point(2 * kPi * i / n));
  return pts;
}

Json points_json(const std::vector<Vec2>& pts) {
  Json a = Json::array();
  for (const Vec2& p : pts) a.push_back({p.x(), p.y()});
  return a;
}

struct OvalArgs {
  double outer_radius = 2.0;
  double a = 1.0;
  double b = 0.5;
  double cx = 0.0;
  double cy = 0.0;
  int points = 100;
};

Report run_ovals(const OvalArgs& args, const Globals& g, Svg* fig) {
  Report r("ovals", "balanced chords and outer billiards");
  r.inputs()["outer_radius"] = args.outer_radius;
  r.inputs()["inner_ellipse"] = {args.a, args.b};
  r.inputs()["inner_centre"] = {args.cx, args.cy};
  const SupportOval outer = SupportOval::circle(args.outer_radius);
  const SupportOval inner = SupportOval::ellipse(args.a, args.b, Vec2(args.cx, args.cy));
  const BalancedChords bc = balanced_tangent_chords(outer, inner);
  Json chords = Json::array();
  for (double t : bc.thetas) {
    const TangentChord c = tangent_chord(outer, inner, t);
    chords.push_back({{"theta", t},
                      {"tangency", {c.tangency.x(), c.tangency.y()}},
                      {"ahead", {c.ahead.x(), c.ahead.y()}},
                      {"behind", {c.behind.x(), c.behind.y()}}});
    if (fig) {
      Svg::Style s;
      s.stroke = "firebrick";
      fig->line(c.ahead, c.behind, s);
      fig->dot(c.tangency, "firebrick");
    }
  }
  r.outputs()["balanced_chords"] = chords;
  r.outputs()["degenerate"] = bc.degenerate;
  r.check_flag("at least two balanced chords", bc.degenerate || bc.thetas.size() >= 2);
  double worst_split = 0.0;
  for (double t : bc.thetas) {
    const TangentChord c = tangent_chord(outer, inner, t);
    worst_split = std::max(worst_split, std::abs((c.ahead - c.tangency).norm() - (c.behind - c.tangency).norm()));
  }
  r.check_residual("balanced chord half-length mismatch", worst_split, g.bound(1e-8));

  // Outer billiard about a smooth non-elliptic oval.
  const SupportOval oval = SupportOval::harmonic(1.0, {0.05, 0.02}, {0.01, 0.0});
  Rng rng = make_stream(g.seed, 0);
  double worst = 0.0;
  for (int i = 0; i < args.points; ++i) {
    const double rad = uniform(rng, 1.6, 4.0), ang = uniform(rng, 0, 2 * kPi);
    const Vec2 x = rad * Vec2(std::cos(ang), std::sin(ang));
    worst = std::max(worst, std::abs(outer_billiard_jacobian(oval, x, i % 2 ? Side::kLeft : Side::kRight) - 1.0));
  }
  r.outputs()["billiard_points"] = args.points;
  r.check_residual("outer billiard |det J - 1|", worst, g.bound(1e-6));

  if (fig) {
    Svg::Style s;
    fig->polyline(outline(outer), s, true);
    fig->polyline(outline(inner), s, true);
  }
  return r;
}

struct StringArgs {
  double a = 2.0;
  double b = 1.0;
  double slack = 0.7;
  int samples = 64;
};

Report run_string(const StringArgs& args, const Globals& g, Svg* fig) {
  Report r("string", "string construction on an ellipse");
  r.inputs()["ellipse"] = {args.a, args.b};
  r.inputs()["slack"] = args.slack;
  r.inputs()["samples"] = args.samples;
  const SupportOval e = SupportOval::ellipse(args.a, args.b);
  const auto samples = string_curve(e, args.slack, args.samples);
  const ConfocalFit fit = fit_confocal_ellipse(samples, args.a, args.b);
  std::vector<Vec2> pts;
  for (const auto& s : samples) pts.push_back(s.point);
  r.outputs()["confocal_lambda"] = fit.lambda;
  r.outputs()["points"] = points_json(pts);
  r.check_residual("distance to the best confocal ellipse", fit.max_deviation, g.bound(1e-8));
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, equal_angle_defect(e, args.slack, s.direction));
  r.check_residual("equal-angle defect (rad)", worst, g.bound(1e-8));
  r.check_flag("string curve is convex", is_convex_polygon(pts));
  if (fig) {
    Svg::Style s;
    fig->polyline(outline(e), s, true);
    Svg::Style c;
    c.stroke = "steelblue";
    fig->polyline(pts, c, true);
    // One taut string for illustration.
    Svg::Style t;
    t.stroke = "firebrick";
    t.dashed = true;
    const auto& first = samples.front();
    fig->line(first.point, first.touch_a, t);
    fig->line(first.point, first.touch_b, t);
  }
  return r;
}

Report run_equitangent(double ratio, int samples_per_step, int trace_stride, const Globals& g, Svg* fig) {
  Report r("equitangent", "equitangent chord schedule");
  r.inputs()["radius_ratio"] = ratio;
  r.inputs()["samples_per_step"] = samples_per_step;
  const auto poly = symmetric_dodecagon(1.0, ratio);
  const auto schedule = default_equitangent_schedule();
  Json states = Json::array();
  for (const auto& s : schedule) states.push_back(s.str());
  r.inputs()["schedule"] = states;
  const EquitangentTrace t = equitangent_replay(poly, schedule, samples_per_step);
  r.check_residual("closure against the initial chord rotated by pi/3", t.closure_residual, g.bound(1e-9));
  r.outputs()["min_margin"] = t.min_margin;
  r.outputs()["margin_nonnegative"] = t.min_margin >= -1e-12;
  Json trace = Json::array();
  for (std::size_t i = 0; i < t.samples.size(); i += static_cast<std::size_t>(trace_stride)) {
    const auto& s = t.samples[i];
    trace.push_back({{"step", s.step}, {"s", s.s}, {"segment_a", s.segment_a}, {"segment_b", s.segment_b},
                     {"margin", s.margin}});
  }
  r.outputs()["margin_trace"] = trace;
  if (fig) {
    Svg::Style s;
    fig->polyline(poly, s, true);
    Svg::Style c;
    c.stroke = "steelblue";
    c.width = 0.5;
    for (std::size_t i = 0; i < t.samples.size(); i += 16) {
      fig->line(t.samples[i].a, t.samples[i].b, c);
    }
    for (int k = 0; k < 12; ++k) fig->label(1.08 * poly[static_cast<std::size_t>(k)], std::to_string(k + 1));
  }
  return r;
}

}  // namespace

void add_curves_commands(CLI::App& app, Registry& reg) {
  {
    auto a = std::make_shared<OvalArgs>();
    CLI::App* sub = add_subcommand(app, "ovals", "Balanced tangent chords and the outer billiard map");
    sub->add_option("--outer-radius", a->outer_radius, "Radius of the outer circle")->check(CLI::PositiveNumber);
    sub->add_option("--a", a->a, "Inner ellipse semi-axis along x")->check(CLI::PositiveNumber);
    sub->add_option("--b", a->b, "Inner ellipse semi-axis along y")->check(CLI::PositiveNumber);
    sub->add_option("--cx", a->cx, "Inner ellipse centre x");
    sub->add_option("--cy", a->cy, "Inner ellipse centre y");
    sub->add_option("--points", a->points, "Random points for the Jacobian check")->check(CLI::Range(1, 1'000'000));
    reg.push_back({sub, [=](const Globals& g, Svg* fig) { return run_ovals(*a, g, fig); }});
  }
  {
    auto a = std::make_shared<StringArgs>();
    CLI::App* sub = add_subcommand(app, "string", "Closed string wrapped around an ellipse");
    sub->add_option("--a", a->a, "Ellipse semi-axis along x")->check(CLI::PositiveNumber);
    sub->add_option("--b", a->b, "Ellipse semi-axis along y")->check(CLI::PositiveNumber);
    sub->add_option("--slack", a->slack, "String length minus perimeter")->check(CLI::PositiveNumber);
    sub->add_option("--samples", a->samples, "Rays from the centre")->check(CLI::Range(3, 100000));
    reg.push_back({sub, [=](const Globals& g, Svg* fig) {
                     if (a->a <= a->b) throw Error(ErrorKind::kInvalidArgument, "string needs --a > --b");
                     return run_string(*a, g, fig);
                   }});
  }
  {
    auto ratio = std::make_shared<double>(kDefaultEvenRadius);
    auto per_step = std::make_shared<int>(64);
    auto stride = std::make_shared<int>(8);
    CLI::App* sub = add_subcommand(app, "equitangent", "Replay the chord schedule on a symmetric dodecagon");
    sub->add_option("--ratio", *ratio, "Even-vertex radius (odd vertices at radius 1)")->check(CLI::PositiveNumber);
    sub->add_option("--samples-per-step", *per_step, "Samples per transition")->check(CLI::Range(1, 100000));
    sub->add_option("--trace-stride", *stride, "Report every k-th trace sample")->check(CLI::Range(1, 100000));
    reg.push_back({sub, [=](const Globals& g, Svg* fig) { return run_equitangent(*ratio, *per_step, *stride, g, fig); }});
  }
}

}  // namespace geocheck::cli
