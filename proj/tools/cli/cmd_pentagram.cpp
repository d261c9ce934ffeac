#include "command.hpp"

#include <geocheck/pentagram.hpp>

#include <cmath>
#include <memory>

namespace geocheck::cli {

namespace {

using namespace geocheck::pentagram;

struct PentagramArgs {
  int n = 5;
  int count = 100;
  int iterations = 3;
};

void draw(const ProjPolygon& p, int iterations, Svg& fig) {
  const std::vector<Vec2> first = p.affine();
  Svg::Style diag;
  diag.stroke = "grey";
  diag.dashed = true;
  diag.width = 0.5;
  const std::size_t n = first.size();
  for (std::size_t i = 0; i < n; ++i) fig.line(first[i], first[(i + 2) % n], diag);
  static const char* kColours[] = {"black", "steelblue", "firebrick", "darkgreen", "darkorange", "purple"};
  ProjPolygon q = p;
  for (int k = 0; k <= iterations; ++k) {
    Svg::Style s;
    s.stroke = kColours[k % 6];
    fig.polyline(q.affine(), s, true);
    if (k < iterations) q = pentagram_map(q);
  }
}

Report run_pentagram(const PentagramArgs& args, const Globals& g, Svg* fig) {
  Report r("pentagram", "pentagram map");
  r.inputs()["n"] = args.n;
  r.inputs()["count"] = args.count;
  Rng rng = make_stream(g.seed, 0);
  const double tol = g.bound(1e-8);
  double t_res = 0.0, dual_res = 0.0, kasner = 0.0, cr = 0.0, sq_res = 0.0;
  double best_generic = 0.0;
  bool all_generic_inequivalent = true;
  std::vector<ProjPolygon> samples;
  for (int i = 0; i < args.count; ++i) {
    const ProjPolygon p = random_convex_polygon(static_cast<std::size_t>(args.n), rng);
    if (i == 0 && fig) draw(p, args.iterations, *fig);
    const ProjPolygon t = pentagram_map(p);
    const double scale = p.diameter();
    if (args.n == 5) {
      t_res = std::max(t_res, projectively_equivalent(p, t, false, kOppositeVertex, tol).residual);
      dual_res = std::max(dual_res, projectively_equivalent(p, dual_polygon(p), false, kSelfDualAlignment, tol).residual);
      kasner = std::max(kasner, kasner_commutation_defect(p, kKasnerShift) / scale);
      for (long k = 0; k < 5; ++k) {
        const double c = vertex_cross_ratio(p, k);
        cr = std::max(cr, std::abs(vertex_cross_ratio(t, k + kOppositeVertex.shift) - c) / std::abs(c));
      }
    } else if (args.n == 6) {
      sq_res = std::max(sq_res, projectively_equivalent(p, pentagram_map(t), false, kHexagonSquareAlignment, tol).residual);
    } else {
      const Equivalence e = projectively_equivalent(p, pentagram_map(t), true, {}, tol);
      all_generic_inequivalent = all_generic_inequivalent && !e.equivalent;
      best_generic = i == 0 ? e.residual : std::min(best_generic, e.residual);
    }
  }
  if (args.n == 5) {
    r.check_residual("pentagon vs its image (max sine)", t_res, tol);
    r.check_residual("pentagon vs its dual (max sine)", dual_res, tol);
    r.check_residual("vertex cross-ratio change (relative)", cr, tol);
    r.check_residual("Kasner commutation defect / diameter", kasner, tol);
  } else if (args.n == 6) {
    r.check_residual("hexagon vs image under the square map (max sine)", sq_res, tol);
  } else {
    r.outputs()["min_square_map_residual"] = best_generic;
    r.check_flag("no polygon equivalent to its square image", all_generic_inequivalent);
  }
  return r;
}

}  // namespace

void add_pentagram_commands(CLI::App& app, Registry& reg) {
  auto a = std::make_shared<PentagramArgs>();
  CLI::App* sub = add_subcommand(app, "pentagram", "Projective equivalences of the pentagram map");
  sub->add_option("--n", a->n, "Number of vertices")->check(CLI::Range(5, 64));
  sub->add_option("--count", a->count, "Random convex polygons")->check(CLI::Range(1, 1'000'000));
  sub->add_option("--iterations", a->iterations, "Iterates drawn in the figure")->check(CLI::Range(0, 5));
  reg.push_back({sub, [=](const Globals& g, Svg* fig) { return run_pentagram(*a, g, fig); }});
}

}  // namespace geocheck::cli
