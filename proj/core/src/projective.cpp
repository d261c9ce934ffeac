#include "geocheck/projective.hpp"

#include "geocheck/error.hpp"

#include <cmath>

namespace geocheck {

HomogeneousTriple::HomogeneousTriple(const Vec3& coords) {
  const double n = coords.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::kDegenerateInput, "homogeneous triple must be a finite nonzero vector");
  }
  coords_ = coords / n;
  for (int i = 0; i < 3; ++i) {
    if (coords_[i] != 0.0) {
      if (coords_[i] < 0.0) coords_ = -coords_;
      break;
    }
  }
}

Vec2 HomogeneousTriple::affine() const {
  if (coords_.z() == 0.0) throw Error(ErrorKind::kDegenerateInput, "point at infinity has no affine chart");
  return {coords_.x() / coords_.z(), coords_.y() / coords_.z()};
}

double HomogeneousTriple::distance(const HomogeneousTriple& other) const {
  return coords_.cross(other.coords_).norm();
}

HomogeneousTriple HomogeneousTriple::cross(const HomogeneousTriple& other) const {
  const Vec3 c = coords_.cross(other.coords_);
  if (c.norm() <= 1e-14) throw Error(ErrorKind::kDegenerateInput, "join/meet of coincident elements");
  return HomogeneousTriple(c);
}

double incidence_det(const HomogeneousTriple& a, const HomogeneousTriple& b, const HomogeneousTriple& c) {
  return a.coords().dot(b.coords().cross(c.coords()));
}

double cross_ratio(const HomogeneousTriple& a, const HomogeneousTriple& b, const HomogeneousTriple& c,
                   const HomogeneousTriple& d, double tol) {
  const std::array<const HomogeneousTriple*, 4> q{&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (q[i]->distance(*q[j]) <= tol) {
        throw Error(ErrorKind::kDegenerateInput, "cross-ratio of coincident elements");
      }
    }
  }
  // The pencil spans a plane W in R^3; its normal e lies off W.
  const Vec3 e = a.coords().cross(b.coords()).normalized();
  if (std::abs(c.coords().dot(e)) > tol || std::abs(d.coords().dot(e)) > tol) {
    throw Error(ErrorKind::kDegenerateInput, "cross-ratio of non-collinear elements");
  }
  auto det = [&](const Vec3& u, const Vec3& v) { return u.dot(v.cross(e)); };
  const double ac = det(a.coords(), c.coords());
  const double bd = det(b.coords(), d.coords());
  const double ad = det(a.coords(), d.coords());
  const double bc = det(b.coords(), c.coords());
  return (ac * bd) / (ad * bc);
}

Mat3 adjugate(const Mat3& m) {
  Mat3 adj;
  adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return adj;
}

Conic::Conic(const Mat3& m) {
  const Mat3 sym = 0.5 * (m + m.transpose());
  const double n = sym.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorKind::kDegenerateInput, "zero conic matrix");
  m_ = sym / n;
}

bool Conic::degenerate(double tol) const { return std::abs(m_.determinant()) <= tol; }

double Conic::point_residual(const HomogeneousTriple& p) const {
  return std::abs(p.coords().dot(m_ * p.coords()));
}

double Conic::line_residual(const HomogeneousTriple& line) const {
  const Mat3 dual = adjugate(m_);
  return std::abs(line.coords().dot(dual * line.coords())) / dual.norm();
}

Conic Conic::dual() const { return Conic(adjugate(m_)); }

HomogeneousTriple Conic::polar(const HomogeneousTriple& p) const { return HomogeneousTriple(m_ * p.coords()); }

HomogeneousTriple Conic::pole(const HomogeneousTriple& line) const {
  return HomogeneousTriple(adjugate(m_) * line.coords());
}

Conic Conic::circle(const Vec2& center, double radius) {
  Mat3 m;
  m << 1.0, 0.0, -center.x(), 0.0, 1.0, -center.y(), -center.x(), -center.y(),
      center.squaredNorm() - radius * radius;
  return Conic(m);
}

bool Conic::equivalent(const Conic& other, double tol) const {
  return std::min((m_ - other.m_).norm(), (m_ + other.m_).norm()) <= tol;
}

FieldTriple::FieldTriple(std::array<int, 3> coords, int modulus) : q_(modulus) {
  if (modulus < 2) throw Error(ErrorKind::kInvalidArgument, "modulus must be at least 2");
  for (auto& x : coords) x = ((x % q_) + q_) % q_;
  int lead = 0;
  for (int x : coords) {
    if (x != 0) {
      lead = x;
      break;
    }
  }
  if (lead == 0) throw Error(ErrorKind::kDegenerateInput, "zero triple over F_q");
  // Inverse by Fermat's little theorem; q is prime for every caller.
  long long inv = 1, base = lead, e = q_ - 2;
  while (e > 0) {
    if (e & 1) inv = inv * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  for (int i = 0; i < 3; ++i) c_[i] = static_cast<int>(coords[i] * inv % q_);
}

int FieldTriple::dot(const FieldTriple& other) const {
  long long s = 0;
  for (int i = 0; i < 3; ++i) s += static_cast<long long>(c_[i]) * other.c_[i];
  return static_cast<int>(s % q_);
}

}  // namespace geocheck
