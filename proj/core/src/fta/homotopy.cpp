#include "geocheck/fta/homotopy.hpp"

#include "geocheck/error.hpp"
#include "geocheck/fta/resultant.hpp"
#include "geocheck/random.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <optional>

namespace geocheck::fta {

namespace {

using std::numbers::pi;

struct Path {
  ComplexPoly start;   // e^{iγ}(zⁿ − 1)
  ComplexPoly target;  // monic
  double scale;

  ComplexPoly at(double s) const {
    ComplexPoly p(target.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = (1.0 - s) * start[k] + s * target[k];
    return p;
  }
};

double coefficient_scale(const ComplexPoly& p) {
  double m = 0.0;
  for (const auto& c : p) m = std::max(m, std::abs(c));
  return m;
}

/// Newton on p from z. Converged when the step is below tol·(1 + |z|) or the
/// residual is at rounding level (which is all a multiple root allows).
std::optional<Complex> newton(const ComplexPoly& p, const ComplexPoly& dp, Complex z, double tol, double scale) {
  for (int it = 0; it < 12; ++it) {
    const Complex f = horner(p, z);
    if (std::abs(f) <= 1e-15 * scale * std::max(1.0, std::pow(std::abs(z), double(p.size() - 1)))) return z;
    const Complex df = horner(dp, z);
    if (df == Complex(0.0)) return std::nullopt;
    const Complex step = f / df;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
    if (std::abs(step) <= tol * (1.0 + std::abs(z))) return z;
  }
  return std::nullopt;
}

std::optional<Complex> track(const Path& path, Complex z, int steps, double tol, bool stop_short) {
  const ComplexPoly ds = [&] {
    ComplexPoly d(path.target.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = path.target[k] - path.start[k];
    return d;
  }();
  for (int k = 0; k < steps; ++k) {
    const double s0 = static_cast<double>(k) / steps;
    double s1 = static_cast<double>(k + 1) / steps;
    if (stop_short && k + 1 == steps) s1 = 1.0;
    const ComplexPoly p0 = path.at(s0);
    const Complex pz = horner(derivative(p0), z);
    if (pz == Complex(0.0)) return std::nullopt;
    z -= (s1 - s0) * horner(ds, z) / pz;
    const ComplexPoly p1 = path.at(s1);
    auto corrected = newton(p1, derivative(p1), z, tol, path.scale);
    if (!corrected) {
      // Near a multiple root of the target the corrector stalls; accept the
      // predicted point on the final step and let polishing finish.
      if (stop_short && k + 1 == steps) return z;
      return std::nullopt;
    }
    z = *corrected;
  }
  return z;
}

double min_separation(const std::vector<Complex>& r) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) d = std::min(d, std::abs(r[i] - r[j]));
  }
  return d;
}

HomotopyResult run(const ComplexPoly& target_in, std::uint64_t seed, const HomotopyOptions& opts,
                   std::optional<bool> exact_on_delta) {
  if (target_in.size() < 2 || target_in.back() == Complex(0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "target needs degree >= 1 and a nonzero leading coefficient");
  }
  const std::size_t n = target_in.size() - 1;
  ComplexPoly target = target_in;
  for (auto& c : target) c /= target_in.back();
  const double scale = std::max(1.0, coefficient_scale(target));
  const double threshold = 1e-12 * std::pow(scale, 2.0 * double(n) - 2.0);

  bool on_delta = false;
  if (exact_on_delta) {
    on_delta = *exact_on_delta;
  } else if (n >= 2) {
    on_delta = std::abs(discriminant(target)) <= threshold;
  }

  Rng rng(seed);
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    const double gamma = uniform(rng, 0.0, 2.0 * pi);
    Path path;
    path.target = target;
    path.scale = scale;
    path.start.assign(n + 1, Complex(0.0));
    path.start[n] = std::polar(1.0, gamma);
    path.start[0] = -std::polar(1.0, gamma);

    // Discriminant monitor over the path samples (s = 1 is the target itself).
    double min_ratio = std::numeric_limits<double>::infinity();
    bool monitor_ok = true;
    if (n >= 2) {
      for (int k = 0; k < opts.steps; ++k) {
        const ComplexPoly ps = path.at(static_cast<double>(k) / opts.steps);
        const double ratio = std::abs(discriminant(ps)) / std::pow(scale, 2.0 * double(n) - 2.0);
        min_ratio = std::min(min_ratio, ratio);
        if (ratio < 1e-12) monitor_ok = false;
      }
    }
    if (!monitor_ok) continue;

    std::vector<std::optional<Complex>> ends(n);
    auto work = [&](std::size_t first, std::size_t stride) {
      for (std::size_t i = first; i < n; i += stride) {
        const Complex z0 = std::polar(1.0, 2.0 * pi * double(i) / double(n));
        std::optional<Complex> z;
        int steps = opts.steps;
        for (int r = 0; r <= opts.max_refinements && !z; ++r, steps *= 2) {
          z = track(path, z0, steps, opts.newton_tol, on_delta);
        }
        ends[i] = z;
      }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(n)));
    if (threads == 1) {
      work(0, 1);
    } else {
      std::vector<std::future<void>> jobs;
      for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, work, t, threads));
      for (auto& j : jobs) j.get();
    }
    if (std::any_of(ends.begin(), ends.end(), [](const auto& z) { return !z; })) continue;

    HomotopyResult res;
    res.gamma = gamma;
    res.retries = attempt;
    res.min_discriminant_ratio = min_ratio;
    res.on_discriminant = on_delta;
    const ComplexPoly dt = derivative(target);
    for (const auto& z : ends) {
      const auto polished = newton(target, dt, *z, opts.newton_tol * 1e-3, scale);
      res.roots.push_back(polished ? *polished : *z);
    }
    res.min_separation = n >= 2 ? min_separation(res.roots) : std::numeric_limits<double>::infinity();
    if (!on_delta && res.min_separation <= 1e-8) continue;  // two paths landed on one root

    for (const Complex& z : res.roots) res.max_residual = std::max(res.max_residual, std::abs(horner(target, z)));
    if (on_delta) {
      std::vector<bool> used(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        RootCluster c{res.roots[i], 1};
        Complex sum = res.roots[i];
        used[i] = true;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!used[j] && std::abs(res.roots[j] - res.roots[i]) <= opts.cluster_radius) {
            used[j] = true;
            sum += res.roots[j];
            ++c.multiplicity;
          }
        }
        c.centre = sum / double(c.multiplicity);
        res.clusters.push_back(c);
      }
    } else {
      for (const Complex& z : res.roots) res.clusters.push_back({z, 1});
    }
    return res;
  }
  throw Error(ErrorKind::kTrackingFailure,
              "homotopy tracking failed after " + std::to_string(opts.max_retries) + " retries");
}

}  // namespace

HomotopyResult homotopy_roots(const ComplexPoly& target, std::uint64_t seed, const HomotopyOptions& opts) {
  return run(target, seed, opts, std::nullopt);
}

HomotopyResult homotopy_roots(const RationalPoly& target, std::uint64_t seed, const HomotopyOptions& opts) {
  if (target.degree() < 1) throw Error(ErrorKind::kInvalidArgument, "target needs degree >= 1");
  const bool on_delta = target.degree() >= 2 && discriminant(target) == 0;
  return run(target.to_complex(), seed, opts, on_delta);
}

}  // namespace geocheck::fta
