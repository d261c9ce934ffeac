#include "geocheck/integral.hpp"

#include "geocheck/error.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

namespace geocheck::integral {

using std::numbers::pi;

Box::Box(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "box edges must be positive");
  }
}

std::array<Vec3, 8> Box::corners() const {
  std::array<Vec3, 8> out;
  for (int i = 0; i < 8; ++i) {
    out[i] = Vec3((i & 1) ? a : 0.0, (i & 2) ? b : 0.0, (i & 4) ? c : 0.0);
  }
  return out;
}

Pose::Pose(const Mat3& rotation, const Vec3& translation) : r_(rotation), t_(translation) {
  if ((r_.transpose() * r_ - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-12 || r_.determinant() < 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "pose rotation must be orthonormal with det +1");
  }
}

double tube_volume(const Box& box, double eps) {
  if (!(eps >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "tube radius must be non-negative");
  return box.volume() + eps * box.surface() + pi * eps * eps * box.edge_sum() +
         4.0 / 3.0 * pi * eps * eps * eps;
}

double distance_to_box(const Box& box, const Vec3& p) {
  const double dx = std::max({0.0 - p.x(), 0.0, p.x() - box.a});
  const double dy = std::max({0.0 - p.y(), 0.0, p.y() - box.b});
  const double dz = std::max({0.0 - p.z(), 0.0, p.z() - box.c});
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

template <class ChunkFn>
auto run_chunks(std::uint64_t n_samples, const McOptions& opts, ChunkFn&& fn) {
  using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}));
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opts.chunk);
  const std::uint64_t n_chunks = (n_samples + chunk - 1) / chunk;
  std::vector<Result> partial(n_chunks);
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t c = first; c < n_chunks; c += stride) {
      const std::uint64_t count = std::min(chunk, n_samples - c * chunk);
      partial[c] = fn(c, count);
    }
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, work, t, threads));
    for (auto& j : jobs) j.get();
  }
  return partial;
}

void require_samples(std::uint64_t n) {
  if (n < 10'000) throw Error(ErrorKind::kInvalidArgument, "Monte Carlo needs at least 10^4 samples");
}

}  // namespace

Estimate mc_tube_volume(const Box& box, double eps, std::uint64_t n_samples, std::uint64_t seed,
                        const McOptions& opts) {
  require_samples(n_samples);
  if (!(eps >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "tube radius must be non-negative");
  const Vec3 lo(-eps, -eps, -eps);
  const Vec3 hi(box.a + eps, box.b + eps, box.c + eps);
  const double bbox = (hi - lo).prod();
  const auto counts = run_chunks(n_samples, opts, [&](std::uint64_t c, std::uint64_t count) {
    Rng rng = make_stream(seed, c);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const Vec3 p(uniform(rng, lo.x(), hi.x()), uniform(rng, lo.y(), hi.y()), uniform(rng, lo.z(), hi.z()));
      if (distance_to_box(box, p) <= eps) ++hits;
    }
    return hits;
  });
  std::uint64_t hits = 0;
  for (auto h : counts) hits += h;
  const double p = static_cast<double>(hits) / static_cast<double>(n_samples);
  return {bbox * p, bbox * std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples))};
}

SteinerFit fit_steiner_coefficients(const Box& box, std::span<const double> eps_grid, std::uint64_t n_samples,
                                    std::uint64_t seed, const McOptions& opts) {
  if (eps_grid.size() < 3) throw Error(ErrorKind::kInvalidArgument, "need at least three ε values");
  SteinerFit fit;
  Eigen::MatrixXd design(eps_grid.size(), 3);
  Eigen::VectorXd rhs(eps_grid.size());
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    const double e = eps_grid[i];
    if (!(e > 0.0)) throw Error(ErrorKind::kInvalidArgument, "ε grid must be positive");
    const Estimate est = mc_tube_volume(box, e, n_samples, seed + 7919 * (i + 1), opts);
    fit.eps.push_back(e);
    fit.samples.push_back(est);
    const double w = 1.0 / std::max(est.std_error, 1e-12);
    design(i, 0) = w * e;
    design(i, 1) = w * e * e;
    design(i, 2) = w * e * e * e;
    rhs[i] = w * (est.value - box.volume());
  }
  const Eigen::Vector3d coeff = design.colPivHouseholderQr().solve(rhs);
  fit.linear = coeff[0];
  fit.quadratic = coeff[1];
  fit.cubic = coeff[2];
  const Eigen::Matrix3d cov = (design.transpose() * design).inverse();
  fit.quadratic_std_error = std::sqrt(cov(1, 1));
  return fit;
}

bool containment_check(const Box& inner, const Pose& pose, const Box& outer) {
  constexpr double slack = 1e-12;
  for (const Vec3& corner : inner.corners()) {
    const Vec3 p = pose.apply(corner);
    if (p.x() < -slack || p.y() < -slack || p.z() < -slack || p.x() > outer.a + slack ||
        p.y() > outer.b + slack || p.z() > outer.c + slack) {
      return false;
    }
  }
  return true;
}

Pose random_pose(const Box& inner, const Box& outer, Rng& rng) {
  const Mat3 r = random_rotation(rng);
  const Vec3 target(uniform(rng, 0.0, outer.a), uniform(rng, 0.0, outer.b), uniform(rng, 0.0, outer.c));
  const Vec3 centre(inner.a / 2.0, inner.b / 2.0, inner.c / 2.0);
  return Pose(r, target - r * centre);
}

ContainmentSearch containment_search(std::uint64_t trials, std::uint64_t seed) {
  ContainmentSearch out;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Box outer(uniform(rng, 0.5, 2.0), uniform(rng, 0.5, 2.0), uniform(rng, 0.5, 2.0));
    // Inner edges range up to the outer diagonal, so long thin boxes that only
    // fit diagonally (and boxes that barely fail to) are both sampled.
    const double reach = std::sqrt(outer.a * outer.a + outer.b * outer.b + outer.c * outer.c);
    const Box inner(uniform(rng, 0.05, reach), uniform(rng, 0.05, 0.6 * reach), uniform(rng, 0.05, 0.4 * reach));
    const Pose pose = random_pose(inner, outer, rng);
    ++out.trials;
    const bool longer = inner.edge_sum() > outer.edge_sum();
    if (longer) ++out.longer_inner;
    if (containment_check(inner, pose, outer)) {
      ++out.contained;
      if (longer) ++out.edge_violations;
      if (inner.surface() > outer.surface()) ++out.surface_violations;
    }
  }
  return out;
}

double silhouette_area(const Box& box, const Vec3& u) {
  // Opposite faces contribute equally, so ½ Σ over six faces = Σ over three.
  return box.b * box.c * std::abs(u.x()) + box.a * box.c * std::abs(u.y()) + box.a * box.b * std::abs(u.z());
}

Estimate crofton_area(const Box& box, std::uint64_t n_samples, std::uint64_t seed, const McOptions& opts) {
  require_samples(n_samples);
  struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  const auto parts = run_chunks(n_samples, opts, [&](std::uint64_t c, std::uint64_t count) {
    Rng rng = make_stream(seed, c);
    Moments m;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double s = 4.0 * silhouette_area(box, random_unit_vector(rng));
      m.sum += s;
      m.sum_sq += s * s;
    }
    return m;
  });
  Moments total;
  for (const auto& m : parts) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  const double n = static_cast<double>(n_samples);
  const double mean = total.sum / n;
  const double var = std::max(0.0, total.sum_sq / n - mean * mean);
  return {mean, std::sqrt(var / n)};
}

}  // namespace geocheck::integral
