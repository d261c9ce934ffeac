#pragma once

#include "geocheck/linalg.hpp"

#include <cstdint>
#include <random>

namespace geocheck {

/// The one generator used everywhere a seed is accepted.
using Rng = std::mt19937_64;

/// Deterministic sub-stream for chunked Monte Carlo: the same (seed, stream)
/// pair always yields the same generator state.
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

double uniform(Rng& rng, double lo = 0.0, double hi = 1.0);
double gaussian(Rng& rng);

/// Uniform direction on S².
Vec3 random_unit_vector(Rng& rng);

/// Uniform rotation from a normalized Gaussian quaternion.
Mat3 random_rotation(Rng& rng);

}  // namespace geocheck
