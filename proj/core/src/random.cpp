#include "geocheck/random.hpp"

namespace geocheck {

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x9e3779b9u};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double gaussian(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

Vec3 random_unit_vector(Rng& rng) {
  for (;;) {
    const Vec3 v(gaussian(rng), gaussian(rng), gaussian(rng));
    const double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

Mat3 random_rotation(Rng& rng) {
  for (;;) {
    Eigen::Quaterniond q(gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng));
    if (q.norm() > 1e-12) {
      q.normalize();
      return q.toRotationMatrix();
    }
  }
}

}  // namespace geocheck
