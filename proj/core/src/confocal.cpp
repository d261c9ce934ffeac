#include "geocheck/confocal.hpp"

#include "geocheck/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geocheck::confocal {

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace

ConfocalFamily::ConfocalFamily(double a, double b) : a_(a), b_(b) {
  if (!(b > 0.0) || !(a > b) || !std::isfinite(a)) throw Error(ErrorKind::kInvalidArgument, "confocal family needs a > b > 0");
}

double ConfocalFamily::focal_distance() const { return std::sqrt((a_ - b_) * (a_ + b_)); }

double ConfocalFamily::member_residual(double lambda, const Vec2& p) const {
  const double A = a_ * a_ + lambda, B = b_ * b_ + lambda;
  const double s = scale();
  return (A * B - p.x() * p.x() * B - p.y() * p.y() * A) / (s * s * s * s);
}

Mat3 ConfocalFamily::conic_matrix(double lambda) const {
  return Vec3(1.0 / (a_ * a_ + lambda), 1.0 / (b_ * b_ + lambda), -1.0).asDiagonal();
}

Mat3 ConfocalFamily::dual_matrix(double lambda) const {
  return Vec3(a_ * a_ + lambda, b_ * b_ + lambda, -1.0).asDiagonal();
}

EllipticCoords elliptic_coords(const ConfocalFamily& fam, const Vec2& p) {
  const double a2 = fam.a() * fam.a(), b2 = fam.b() * fam.b();
  const double x2 = p.x() * p.x(), y2 = p.y() * p.y();
  const double tol = 1e-14 * fam.scale();
  if (std::abs(p.y()) <= tol && std::abs(p.x()) <= fam.focal_distance() + tol) {
    throw Error(ErrorKind::kDegenerateInput, "elliptic coordinates are degenerate on the focal segment");
  }
  // λ² + pλ + q = 0 with p = a² + b² − x² − y², q = a²b² − x²b² − y²a².
  const double pc = a2 + b2 - x2 - y2;
  const double qc = a2 * b2 - x2 * b2 - y2 * a2;
  const double d = std::sqrt(std::max(0.0, pc * pc - 4.0 * qc));
  // Stable pair of roots.
  const double t = -0.5 * (pc + std::copysign(d, pc));
  double r1 = t;
  double r2 = t != 0.0 ? qc / t : -pc - t;
  if (r1 < r2) std::swap(r1, r2);
  return {r1, r2};
}

Vec2 from_elliptic(const ConfocalFamily& fam, double le, double lh, int sx, int sy) {
  const double a2 = fam.a() * fam.a(), b2 = fam.b() * fam.b();
  const double x2 = (a2 + le) * (a2 + lh) / (a2 - b2);
  const double y2 = -(b2 + le) * (b2 + lh) / (a2 - b2);
  return {sx * std::sqrt(std::max(0.0, x2)), sy * std::sqrt(std::max(0.0, y2))};
}

IvoryQuadrilateral ivory_quadrilateral(const ConfocalFamily& fam, double le1, double le2, double lh1, double lh2,
                                       int quadrant) {
  for (double le : {le1, le2}) {
    if (!fam.is_ellipse(le)) throw Error(ErrorKind::kInvalidArgument, "ellipse parameter must exceed -b^2");
  }
  for (double lh : {lh1, lh2}) {
    if (!fam.is_hyperbola(lh)) throw Error(ErrorKind::kInvalidArgument, "hyperbola parameter must lie in (-a^2, -b^2)");
  }
  if (quadrant < 1 || quadrant > 4) throw Error(ErrorKind::kInvalidArgument, "quadrant must be 1..4");
  const int sx = (quadrant == 1 || quadrant == 4) ? 1 : -1;
  const int sy = (quadrant <= 2) ? 1 : -1;
  IvoryQuadrilateral q;
  const double le[2] = {le1, le2};
  const double lh[2] = {lh1, lh2};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) q.vertex[i][j] = from_elliptic(fam, le[i], lh[j], sx, sy);
  }
  q.diagonal_1 = (q.vertex[0][0] - q.vertex[1][1]).norm();
  q.diagonal_2 = (q.vertex[0][1] - q.vertex[1][0]).norm();
  return q;
}

std::vector<Tangent> tangents_from_point(const ConfocalFamily& fam, double lambda, const Vec2& p) {
  const Mat3 dual = fam.dual_matrix(lambda);
  const Vec3 P(p.x(), p.y(), 1.0);
  // Lines through p: l(d) = P × (d, 0) = M d for d ∈ R².
  Eigen::Matrix<double, 3, 2> m;
  m.col(0) = P.cross(Vec3::UnitX());
  m.col(1) = P.cross(Vec3::UnitY());
  const Eigen::Matrix2d q = m.transpose() * dual * m;
  const double q11 = q(0, 0), q12 = 0.5 * (q(0, 1) + q(1, 0)), q22 = q(1, 1);
  const double disc = q12 * q12 - q11 * q22;
  const double mag = std::abs(q11) + std::abs(q12) + std::abs(q22);
  const double tol = 1e-12 * mag * mag;
  if (disc < -tol) throw Error(ErrorKind::kNoTangent, "point is inside the conic");
  const double root = std::sqrt(std::max(0.0, disc));
  std::vector<Vec2> dirs;
  auto push = [&](double sgn) {
    if (std::abs(q22) >= std::abs(q11)) {
      dirs.emplace_back(q22, -q12 + sgn * root);
    } else {
      dirs.emplace_back(-q12 + sgn * root, q11);
    }
  };
  push(1.0);
  if (disc > tol) push(-1.0);
  const double dual_norm = dual.norm();
  std::vector<Tangent> out;
  for (const Vec2& d : dirs) {
    const HomogeneousTriple l(m * d);
    const Vec3 t = dual * l.coords();
    if (std::abs(t.z()) < 1e-300) throw Error(ErrorKind::kDegenerateInput, "tangency point at infinity");
    out.push_back({l, Vec2(t.x() / t.z(), t.y() / t.z()),
                   std::abs(l.coords().dot(dual * l.coords())) / dual_norm});
  }
  return out;
}

TangentPair tangent_pair(const ConfocalFamily& fam, double lambda, const Vec2& p) {
  if (!fam.is_ellipse(lambda)) throw Error(ErrorKind::kInvalidArgument, "tangent pair needs an ellipse member");
  auto ts = tangents_from_point(fam, lambda, p);
  if (ts.size() != 2) throw Error(ErrorKind::kDegenerateInput, "point lies on the conic; tangents coincide");
  // Centre is the origin: it lies left of p→touch when cross(touch − p, −p) > 0.
  const bool first_right = cross(ts[0].touch - p, -p) > 0.0;
  return first_right ? TangentPair{ts[0], ts[1]} : TangentPair{ts[1], ts[0]};
}

namespace {

Vec2 meet_affine(const HomogeneousTriple& l, const HomogeneousTriple& m) {
  const Vec3 x = l.coords().cross(m.coords());
  if (std::abs(x.z()) <= 1e-12 * x.head<2>().norm()) {
    throw Error(ErrorKind::kDegenerateInput, "tangent lines are parallel");
  }
  return {x.x() / x.z(), x.y() / x.z()};
}

/// Signed distance data for a line through p and q: unit normal n, offset c.
std::pair<Vec2, double> line_normal(const Vec2& p, const Vec2& q) {
  const Vec2 d = (q - p).normalized();
  const Vec2 n(-d.y(), d.x());
  return {n, -n.dot(p)};
}

}  // namespace

ChaslesReport chasles_reye(const ConfocalFamily& fam, double lambda_outer, double lambda_inner, const Vec2& a,
                           const Vec2& b) {
  if (!(lambda_outer > lambda_inner) || !fam.is_ellipse(lambda_inner)) {
    throw Error(ErrorKind::kPrecondition, "need ellipse members with lambda_outer > lambda_inner");
  }
  const double s = fam.scale();
  if ((a - b).norm() <= 1e-12 * s) throw Error(ErrorKind::kPrecondition, "A and B must be distinct");
  for (const Vec2& p : {a, b}) {
    if (std::abs(fam.member_residual(lambda_outer, p)) > 1e-9) {
      throw Error(ErrorKind::kPrecondition, "A and B must lie on the outer member");
    }
  }
  const TangentPair ta = tangent_pair(fam, lambda_inner, a);
  const TangentPair tb = tangent_pair(fam, lambda_inner, b);
  ChaslesReport r;
  r.a = a;
  r.b = b;
  r.c = meet_affine(ta.left.line, tb.right.line);
  r.d = meet_affine(ta.right.line, tb.left.line);
  r.lambda_h_c = elliptic_coords(fam, r.c).lambda_h;
  r.lambda_h_d = elliptic_coords(fam, r.d).lambda_h;
  r.hyperbola_defect = std::abs(r.lambda_h_c - r.lambda_h_d) / (s * s);
  auto dist = [](const Vec2& p, const Vec2& q) { return (p - q).norm(); };
  r.pitot_defect = std::abs(dist(a, r.d) + dist(b, r.c) - dist(a, r.c) - dist(b, r.d)) / s;

  // Circle tangent to the four side lines: n_i·X + c_i = σ_i ρ for a sign
  // pattern σ (σ₀ = +1 fixes the overall sign). Pick the best pattern.
  const std::array<std::pair<Vec2, double>, 4> sides = {line_normal(a, r.c), line_normal(r.c, b),
                                                        line_normal(b, r.d), line_normal(r.d, a)};
  double best = std::numeric_limits<double>::infinity();
  for (int mask = 0; mask < 8; ++mask) {
    Eigen::Matrix<double, 4, 3> m;
    Eigen::Vector4d rhs;
    for (int i = 0; i < 4; ++i) {
      const double sigma = i == 0 ? 1.0 : ((mask >> (i - 1)) & 1 ? -1.0 : 1.0);
      m(i, 0) = sides[i].first.x();
      m(i, 1) = sides[i].first.y();
      m(i, 2) = -sigma;
      rhs[i] = -sides[i].second;
    }
    const Vec3 sol = m.colPivHouseholderQr().solve(rhs);
    if (!sol.allFinite()) continue;
    const double rho = std::abs(sol.z());
    if (!(rho > 1e-12 * s)) continue;
    double dev = 0.0;
    for (int i = 0; i < 4; ++i) {
      dev = std::max(dev, std::abs(std::abs(sides[i].first.dot(sol.head<2>()) + sides[i].second) - rho));
    }
    if (dev < best) {
      best = dev;
      r.incenter = sol.head<2>();
      r.inradius = rho;
    }
  }
  r.incircle_defect = best / s;
  r.excircle_defect = std::abs(dist(a, r.c) + dist(a, r.d) - dist(b, r.c) - dist(b, r.d)) / s;
  const std::array<Vec2, 4> quad = {a, r.c, b, r.d};
  int turns = 0;
  for (int i = 0; i < 4; ++i) {
    const Vec2 e = quad[(i + 1) % 4] - quad[i];
    const Vec2 w = r.incenter - quad[i];
    turns += e.x() * w.y() - e.y() * w.x() > 0.0 ? 1 : -1;
  }
  r.inscribed = std::abs(turns) == 4;
  return r;
}

BilliardState billiard_step(const ConfocalFamily& fam, const BilliardState& st, double lambda_table) {
  if (!fam.is_ellipse(lambda_table)) throw Error(ErrorKind::kInvalidArgument, "billiard table must be an ellipse member");
  const double A = fam.a() * fam.a() + lambda_table, B = fam.b() * fam.b() + lambda_table;
  const Vec2 d = st.direction.normalized();
  const Vec2& p = st.point;
  const double qa = d.x() * d.x() / A + d.y() * d.y() / B;
  const double qb = 2.0 * (p.x() * d.x() / A + p.y() * d.y() / B);
  // Constant term vanishes for p on the table; t = −qb/qa is the other root.
  const double t = -qb / qa;
  const double grad = std::hypot(p.x() / A, p.y() / B);
  if (!(t > 1e-12 * fam.scale()) || std::abs(qb) <= 1e-12 * grad) {
    throw Error(ErrorKind::kGrazing, "billiard direction is tangent to the table or points outward");
  }
  Vec2 q = p + t * d;
  q /= std::sqrt(q.x() * q.x() / A + q.y() * q.y() / B);
  const Vec2 n = Vec2(q.x() / A, q.y() / B).normalized();
  return {q, (d - 2.0 * d.dot(n) * n).normalized()};
}

double caustic_parameter(const ConfocalFamily& fam, const Vec3& u) {
  const double n2 = u.x() * u.x() + u.y() * u.y();
  if (!(n2 > 1e-300)) throw Error(ErrorKind::kInvalidLine, "line at infinity has no caustic");
  const double a2 = fam.a() * fam.a(), b2 = fam.b() * fam.b();
  return (u.z() * u.z() - a2 * u.x() * u.x() - b2 * u.y() * u.y()) / n2;
}

Vec3 line_through(const Vec2& p, const Vec2& direction) {
  const Vec2 n(-direction.y(), direction.x());
  return {n.x(), n.y(), -n.dot(p)};
}

}  // namespace geocheck::confocal
