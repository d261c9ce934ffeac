#pragma once

#include "geocheck/linalg.hpp"
#include "geocheck/random.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace geocheck::integral {

/// Axis-aligned box [0,a]×[0,b]×[0,c] in its own frame.
struct Box {
  double a = 1.0, b = 1.0, c = 1.0;

  Box() = default;
  /// Throws Error(kInvalidArgument) unless all edges are positive.
  Box(double a_, double b_, double c_);

  double volume() const { return a * b * c; }
  double surface() const { return 2.0 * (a * b + b * c + c * a); }
  /// a + b + c; the twelve edges have total length 4L.
  double edge_sum() const { return a + b + c; }
  std::array<Vec3, 8> corners() const;
};

/// Rigid motion x ↦ R x + t. Construction checks RᵀR = I (1e-12) and det R = +1.
class Pose {
 public:
  Pose() = default;
  Pose(const Mat3& rotation, const Vec3& translation);

  const Mat3& rotation() const { return r_; }
  const Vec3& translation() const { return t_; }
  Vec3 apply(const Vec3& x) const { return r_ * x + t_; }

 private:
  Mat3 r_ = Mat3::Identity();
  Vec3 t_ = Vec3::Zero();
};

/// Volume of the ε-neighbourhood: V + εS + πε²L + (4/3)πε³. The quadratic
/// term collects the quarter-cylinders over the 12 edges, (π/4)ε²·4L.
double tube_volume(const Box& box, double eps);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo in chunks of a fixed size, each drawn from its own seeded
/// stream; accepted counts are integers, so any thread count gives the same
/// answer for a given seed and chunk size.
struct McOptions {
  std::size_t chunk = 1u << 16;
  unsigned threads = 1;
};

/// Euclidean distance from p to the box (0 inside).
double distance_to_box(const Box& box, const Vec3& p);

/// Rejection sampling in the bounding box of the ε-neighbourhood.
/// Requires n_samples >= 10⁴.
Estimate mc_tube_volume(const Box& box, double eps, std::uint64_t n_samples, std::uint64_t seed,
                        const McOptions& opts = {});

/// Weighted least-squares fit of V(ε) − V = c1 ε + c2 ε² + c3 ε³ to Monte Carlo
/// estimates on an ε grid; V is known exactly.
struct SteinerFit {
  double linear = 0.0;
  double quadratic = 0.0;
  double cubic = 0.0;
  double quadratic_std_error = 0.0;
  std::vector<double> eps;
  std::vector<Estimate> samples;
};

SteinerFit fit_steiner_coefficients(const Box& box, std::span<const double> eps_grid, std::uint64_t n_samples,
                                    std::uint64_t seed, const McOptions& opts = {});

/// Sufficient and necessary by convexity: all 8 transformed corners of
/// `inner` lie in `outer` (with a 1e-12 slack).
bool containment_check(const Box& inner, const Pose& pose, const Box& outer);

/// Uniform rotation, with the inner box's centre sent to a uniform point of
/// the outer box.
Pose random_pose(const Box& inner, const Box& outer, Rng& rng);

struct ContainmentSearch {
  std::uint64_t trials = 0;
  std::uint64_t contained = 0;
  std::uint64_t longer_inner = 0;       // trials with L_inner > L_outer
  std::uint64_t edge_violations = 0;    // contained while L_inner > L_outer
  std::uint64_t surface_violations = 0; // contained while S_inner > S_outer
};

/// Falsification search over random (inner, outer, pose) triples.
ContainmentSearch containment_search(std::uint64_t trials, std::uint64_t seed);

/// Area of the orthogonal projection along unit direction u: ½ Σ_faces A_f |n_f·u|.
double silhouette_area(const Box& box, const Vec3& u);

/// 4 × mean silhouette area over uniform directions, which equals the
/// surface area for a convex body. Requires n_samples >= 10⁴.
Estimate crofton_area(const Box& box, std::uint64_t n_samples, std::uint64_t seed, const McOptions& opts = {});

}  // namespace geocheck::integral
