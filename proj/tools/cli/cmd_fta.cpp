#include "command.hpp"

#include <geocheck/error.hpp>
#include <geocheck/fta/homotopy.hpp>
#include <geocheck/fta/resultant.hpp>
#include <geocheck/fta/swallowtail.hpp>
#include <geocheck/random.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <fstream>
#include <memory>

namespace geocheck::cli {

namespace {

using namespace geocheck::fta;

/// Eigenvalues of the companion matrix of a polynomial given constant term first.
std::vector<Complex> companion_roots(const ComplexPoly& p) {
  const auto n = static_cast<Eigen::Index>(p.size() - 1);
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -p[static_cast<std::size_t>(i)] / p.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::kSolverFailure, "companion eigenvalues did not converge");
  return {es.eigenvalues().begin(), es.eigenvalues().end()};
}

/// Largest distance between each root and its greedily matched reference,
/// relative to max(1, |reference|).
double match_defect(std::vector<Complex> roots, std::vector<Complex> reference) {
  double worst = 0.0;
  for (const Complex& z : roots) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < reference.size(); ++j) {
      if (std::abs(reference[j] - z) < std::abs(reference[best] - z)) best = j;
    }
    worst = std::max(worst, std::abs(reference[best] - z) / std::max(1.0, std::abs(reference[best])));
    reference.erase(reference.begin() + static_cast<long>(best));
  }
  return worst;
}

Json complex_json(const Complex& z) { return {z.real(), z.imag()}; }

struct FtaArgs {
  int count = 10;
  int max_degree = 10;
  std::vector<std::string> poly;
  unsigned threads = 1;
};

void check_discriminants(Report& r, Rng& rng) {
  std::uniform_int_distribution<long long> coeff(-50, 50);
  std::string bad;
  int tried = 0;
  for (int i = 0; i < 200; ++i) {
    const long long a0 = coeff(rng), a1 = coeff(rng);
    ++tried;
    if (discriminant(RationalPoly::from_ints({a0, a1, 1})) != make_rational(a1 * a1 - 4 * a0)) {
      bad = "z^2 + " + std::to_string(a1) + "z + " + std::to_string(a0);
      break;
    }
    const long long q = coeff(rng), p = coeff(rng);
    ++tried;
    if (discriminant(RationalPoly::from_ints({q, p, 0, 1})) != make_rational(-4 * p * p * p - 27 * q * q)) {
      bad = "z^3 + " + std::to_string(p) + "z + " + std::to_string(q);
      break;
    }
  }
  r.outputs()["discriminants_checked"] = tried;
  r.check_exact("first polynomial with a wrong discriminant", bad.empty() ? "none" : bad, "none");
}

Report run_fta(const FtaArgs& args, const Globals& g) {
  Report r("fta", "roots by discriminant-avoiding homotopy");
  HomotopyOptions opts;
  opts.threads = args.threads;
  const double tol = g.bound(1e-10);
  if (!args.poly.empty()) {
    // Coefficients arrive leading term first.
    std::vector<Rational> c;
    for (auto it = args.poly.rbegin(); it != args.poly.rend(); ++it) c.push_back(parse_rational(*it));
    const RationalPoly p(std::move(c));
    if (p.degree() < 1) throw Error(ErrorKind::kInvalidArgument, "--poly needs degree at least 1");
    r.inputs()["poly"] = p.str();
    const HomotopyResult h = homotopy_roots(p, g.seed, opts);
    Json roots = Json::array();
    for (const Complex& z : h.roots) roots.push_back(complex_json(z));
    r.outputs()["roots"] = roots;
    r.outputs()["retries"] = h.retries;
    r.outputs()["on_discriminant"] = h.on_discriminant;
    if (h.on_discriminant) {
      Json cl = Json::array();
      for (const RootCluster& k : h.clusters) cl.push_back({{"centre", complex_json(k.centre)}, {"multiplicity", k.multiplicity}});
      r.outputs()["clusters"] = cl;
    } else {
      r.check_residual("agreement with companion eigenvalues", match_defect(h.roots, companion_roots(p.to_complex())),
                       g.bound(1e-8));
    }
    r.check_residual("max |P(root)| (monic)", h.max_residual, tol);
    return r;
  }
  r.inputs()["count_per_degree"] = args.count;
  r.inputs()["max_degree"] = args.max_degree;
  Rng rng = make_stream(g.seed, 0);
  check_discriminants(r, rng);
  double residual = 0.0, agreement = 0.0;
  int retries = 0;
  bool all_roots = true;
  for (int n = 2; n <= args.max_degree; ++n) {
    for (int i = 0; i < args.count; ++i) {
      ComplexPoly p;
      for (int k = 0; k <= n; ++k) p.emplace_back(uniform(rng, -1, 1), uniform(rng, -1, 1));
      // Unit leading coefficient keeps the roots of moderate size, so the
      // absolute monic residual measures tracking rather than rounding in z^n.
      p.back() /= std::abs(p.back());
      const std::uint64_t seed = rng();
      const HomotopyResult h = homotopy_roots(p, seed, opts);
      all_roots = all_roots && h.roots.size() == static_cast<std::size_t>(n);
      residual = std::max(residual, h.max_residual);
      agreement = std::max(agreement, match_defect(h.roots, companion_roots(p)));
      retries += h.retries;
    }
  }
  r.outputs()["restarts"] = retries;
  r.check_flag("n roots returned for degree n", all_roots);
  r.check_residual("max |P(root)| (monic)", residual, tol);
  r.check_residual("agreement with companion eigenvalues", agreement, g.bound(1e-8));
  return r;
}

struct SwallowtailArgs {
  std::vector<double> u{-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  int v_samples = 40;
  double v_extent = 2.0;
  std::string csv;
};

Report run_swallowtail(const SwallowtailArgs& args, const Globals&, Svg* fig) {
  Report r("swallowtail", "discriminant surface of the depressed quartic");
  std::vector<double> vs;
  // Even sample counts keep v = 0, where two sheets meet, off the grid.
  for (int i = 0; i < args.v_samples; ++i) {
    vs.push_back(-args.v_extent + args.v_extent * (2 * i + 1) / args.v_samples);
  }
  r.inputs()["u"] = args.u;
  r.inputs()["v_samples"] = args.v_samples;
  r.inputs()["v_extent"] = args.v_extent;
  const auto slices = swallowtail_sample(args.u, vs);
  int three = 0, one = 0, wrong = 0, skipped = 0, points = 0;
  for (const SwallowtailSlice& s : slices) {
    points += static_cast<int>(s.points.size());
    // The triple-root cusp edge lies at v² = −8u³/27.
    const double cusp = s.u < 0 ? std::sqrt(-8.0 * s.u * s.u * s.u / 27.0) : 0.0;
    const double av = std::abs(s.v);
    if (s.v == 0.0 || (av > 0.9 * cusp && av < 1.1 * cusp)) {
      ++skipped;
      continue;
    }
    const int expected = av < cusp ? 3 : 1;
    if (s.real_sheets != expected) ++wrong;
    (expected == 3 ? three : one) += s.real_sheets == expected;
  }
  r.outputs()["slices"] = slices.size();
  r.outputs()["points"] = points;
  r.outputs()["three_sheet_slices"] = three;
  r.outputs()["one_sheet_slices"] = one;
  r.outputs()["slices_near_cusp_edge"] = skipped;
  r.check_exact("slices with the wrong sheet count", wrong, 0);
  bool negative = false, positive = false;
  for (double u : args.u) (u < 0 ? negative : positive) = true;
  if (negative) r.check_flag("three sheets seen for u < 0", three > 0);
  if (positive) r.check_flag("one sheet seen for u > 0", one > 0);
  if (!args.csv.empty()) {
    std::ofstream out(args.csv);
    if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + args.csv);
    out << "u,v,w,real_double_root\n";
    out.precision(17);
    for (const auto& s : slices) {
      for (const auto& p : s.points) out << p.u << ',' << p.v << ',' << p.w << ',' << (p.real_double_root ? 1 : 0) << '\n';
    }
  }
  if (fig) {
    static const char* kColours[] = {"firebrick", "darkorange", "goldenrod", "steelblue", "darkgreen", "purple"};
    std::size_t k = 0;
    for (double u : args.u) {
      const char* colour = kColours[k++ % 6];
      for (const auto& s : slices) {
        if (s.u != u) continue;
        for (const auto& p : s.points) {
          if (p.real_double_root) fig->dot(Vec2(p.v, p.w), colour);
        }
      }
      fig->label(Vec2(args.v_extent, 0.0) + Vec2(0.0, -0.3 * static_cast<double>(k)), "u = " + std::to_string(u));
    }
  }
  return r;
}

}  // namespace

void add_fta_commands(CLI::App& app, Registry& reg) {
  {
    auto a = std::make_shared<FtaArgs>();
    CLI::App* sub = add_subcommand(app, "fta", "Exact discriminants and homotopy root tracking");
    sub->add_option("--count", a->count, "Random targets per degree")->check(CLI::Range(1, 100000));
    sub->add_option("--max-degree", a->max_degree, "Largest degree tried")->check(CLI::Range(2, 40));
    sub->add_option("--poly", a->poly, "Rational coefficients, leading term first")->expected(1, -1);
    sub->add_option("--threads", a->threads, "Worker threads for path tracking")->check(CLI::Range(1, 256));
    reg.push_back({sub, [=](const Globals& g, Svg* fig) {
                     reject_figure(fig, "fta");
                     return run_fta(*a, g);
                   }});
  }
  {
    auto a = std::make_shared<SwallowtailArgs>();
    CLI::App* sub = add_subcommand(app, "swallowtail", "Sample the discriminant surface of z^4 + u z^2 + v z + w");
    sub->add_option("--u", a->u, "u values of the slices")->expected(1, -1);
    sub->add_option("--v-samples", a->v_samples, "v samples per slice (even keeps v = 0 off the grid)")
        ->check(CLI::Range(1, 100000));
    sub->add_option("--v-extent", a->v_extent, "v ranges over [-extent, extent]")->check(CLI::PositiveNumber);
    sub->add_option("--csv", a->csv, "Write (u, v, w) triples to this file");
    reg.push_back({sub, [=](const Globals& g, Svg* fig) { return run_swallowtail(*a, g, fig); }});
  }
}

}  // namespace geocheck::cli
