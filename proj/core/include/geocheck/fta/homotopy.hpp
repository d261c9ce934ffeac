#pragma once

#include "geocheck/fta/poly.hpp"

#include <cstdint>
#include <vector>

namespace geocheck::fta {

struct HomotopyOptions {
  int steps = 256;
  double newton_tol = 1e-12;
  int max_retries = 8;
  /// Step-count doublings allowed per path before giving up on a phase.
  int max_refinements = 6;
  double cluster_radius = 1e-6;
  /// Paths are independent; any thread count gives identical output.
  unsigned threads = 1;
};

struct RootCluster {
  Complex centre;
  int multiplicity = 1;
};

struct HomotopyResult {
  std::vector<Complex> roots;
  /// Phase γ of the path that succeeded.
  double gamma = 0.0;
  int retries = 0;
  /// min over path samples of |disc(P_s)| / scale^{2n−2}.
  double min_discriminant_ratio = 0.0;
  /// max |target(root)| for the monic-normalized target.
  double max_residual = 0.0;
  double min_separation = 0.0;
  /// Set when the target's discriminant vanishes; roots are then grouped.
  bool on_discriminant = false;
  std::vector<RootCluster> clusters;
};

/// Tracks the n roots of zⁿ − 1 along P_s = (1 − s)e^{iγ}(zⁿ − 1) + s·target to
/// the roots of the target, restarting with a fresh γ drawn from `seed` when
/// the discriminant monitor dips below 1e−12·scale^{2n−2} or a path fails.
/// Throws Error(kTrackingFailure) after max_retries restarts.
HomotopyResult homotopy_roots(const ComplexPoly& target, std::uint64_t seed, const HomotopyOptions& opts = {});

/// Exact input: an exactly zero discriminant marks the target as lying on Δ.
HomotopyResult homotopy_roots(const RationalPoly& target, std::uint64_t seed, const HomotopyOptions& opts = {});

}  // namespace geocheck::fta
