#include "geocheck/pentagram.hpp"

#include "geocheck/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace geocheck::pentagram {

ProjPolygon::ProjPolygon(std::vector<HomogeneousTriple> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 5) throw Error(ErrorKind::kInvalidArgument, "projective polygon needs at least 5 vertices");
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const auto& a = (*this)[static_cast<long>(i)];
    const auto& b = (*this)[static_cast<long>(i) + 1];
    const auto& c = (*this)[static_cast<long>(i) + 2];
    if (a.equivalent(b, 1e-12)) throw Error(ErrorKind::kDegenerateInput, "consecutive vertices coincide");
    if (std::abs(incidence_det(a, b, c)) <= 1e-12) {
      throw Error(ErrorKind::kDegenerateInput, "three consecutive vertices are collinear");
    }
  }
}

ProjPolygon ProjPolygon::from_affine(const std::vector<Vec2>& pts) {
  std::vector<HomogeneousTriple> v;
  for (const Vec2& p : pts) v.push_back(HomogeneousTriple::from_affine(p));
  return ProjPolygon(std::move(v));
}

const HomogeneousTriple& ProjPolygon::operator[](long i) const {
  const long n = static_cast<long>(v_.size());
  return v_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::vector<Vec2> ProjPolygon::affine() const {
  std::vector<Vec2> out;
  for (const auto& p : v_) out.push_back(p.affine());
  return out;
}

double ProjPolygon::diameter() const {
  const auto pts = affine();
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, (pts[i] - pts[j]).norm());
  }
  return d;
}

ProjPolygon pentagram_map(const ProjPolygon& p) {
  std::vector<HomogeneousTriple> out;
  for (long i = 0; i < static_cast<long>(p.size()); ++i) {
    out.push_back(meet(join(p[i - 1], p[i + 1]), join(p[i], p[i + 2])));
  }
  return ProjPolygon(std::move(out));
}

ProjPolygon dual_polygon(const ProjPolygon& p) {
  std::vector<HomogeneousTriple> out;
  for (long i = 0; i < static_cast<long>(p.size()); ++i) out.push_back(join(p[i], p[i + 1]));
  return ProjPolygon(std::move(out));
}

ProjPolygon transform(const Mat3& h, const ProjPolygon& p) {
  std::vector<HomogeneousTriple> out;
  for (const auto& v : p.vertices()) out.emplace_back(h * v.coords());
  return ProjPolygon(std::move(out));
}

namespace {

/// Columns scaled so that their sum is the fourth point.
Mat3 frame(const std::array<HomogeneousTriple, 4>& q) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (std::abs(incidence_det(q[i], q[j], q[k])) <= 1e-12) {
          throw Error(ErrorKind::kDegenerateInput, "three points of the quadruple are collinear");
        }
      }
    }
  }
  Mat3 m;
  for (int i = 0; i < 3; ++i) m.col(i) = q[i].coords();
  const Vec3 lambda = m.fullPivLu().solve(q[3].coords());
  return m * lambda.asDiagonal();
}

}  // namespace

Mat3 projective_transform_from(const std::array<HomogeneousTriple, 4>& src,
                               const std::array<HomogeneousTriple, 4>& dst) {
  const Mat3 h = frame(dst) * frame(src).inverse();
  return h / h.norm();
}

Equivalence projectively_equivalent(const ProjPolygon& p, const ProjPolygon& q, bool try_all, Alignment alignment,
                                    double tol) {
  if (p.size() != q.size()) return {false, std::numeric_limits<double>::infinity(), alignment};
  std::vector<Alignment> candidates;
  if (try_all) {
    for (long s = 0; s < static_cast<long>(p.size()); ++s) {
      candidates.push_back({s, false});
      candidates.push_back({s, true});
    }
  } else {
    candidates.push_back(alignment);
  }
  Equivalence best{false, std::numeric_limits<double>::infinity(), alignment};
  for (const Alignment& al : candidates) {
    auto target = [&](long i) -> const HomogeneousTriple& { return q[al.reflected ? al.shift - i : al.shift + i]; };
    Mat3 h;
    try {
      h = projective_transform_from({p[0], p[1], p[2], p[3]}, {target(0), target(1), target(2), target(3)});
    } catch (const Error&) {
      continue;
    }
    double res = 0.0;
    for (long i = 0; i < static_cast<long>(p.size()); ++i) {
      const Vec3 img = h * p[i].coords();
      res = std::max(res, img.norm() > 0.0 ? HomogeneousTriple(img).distance(target(i)) : 1.0);
    }
    if (res < best.residual) best = {false, res, al};
  }
  best.equivalent = best.residual < tol;
  return best;
}

double vertex_cross_ratio(const ProjPolygon& p, long i) {
  if (p.size() != 5) throw Error(ErrorKind::kUnsupportedOrder, "vertex cross-ratios are defined for pentagons");
  const auto& a = p[i];
  return cross_ratio(join(a, p[i + 1]), join(a, p[i + 2]), join(a, p[i + 3]), join(a, p[i + 4]));
}

namespace {

Mat3 conic_null_space(const std::array<HomogeneousTriple, 5>& elems) {
  Eigen::Matrix<double, 5, 6> a;
  for (int r = 0; r < 5; ++r) {
    const Vec3& p = elems[r].coords();
    a.row(r) << p.x() * p.x(), p.x() * p.y(), p.y() * p.y(), p.x() * p.z(), p.y() * p.z(), p.z() * p.z();
  }
  // Pad to square so the full V is available.
  Eigen::Matrix<double, 6, 6> sq = Eigen::Matrix<double, 6, 6>::Zero();
  sq.topRows<5>() = a;
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(sq, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (!(s[4] > 1e-10 * s[0])) throw Error(ErrorKind::kNoUniqueConic, "five elements do not determine a unique conic");
  const Eigen::Matrix<double, 6, 1> c = svd.matrixV().col(5);
  Mat3 m;
  m << c[0], c[1] / 2, c[3] / 2, c[1] / 2, c[2], c[4] / 2, c[3] / 2, c[4] / 2, c[5];
  return m;
}

}  // namespace

Conic conic_through_points(const std::array<HomogeneousTriple, 5>& pts) { return Conic(conic_null_space(pts)); }

Conic conic_tangent_to_lines(const std::array<HomogeneousTriple, 5>& lines) {
  const Mat3 dual = conic_null_space(lines);
  if (std::abs(dual.determinant()) <= 1e-12 * std::pow(dual.norm(), 3)) {
    throw Error(ErrorKind::kNoUniqueConic, "tangent conic is degenerate");
  }
  return Conic(adjugate(dual));
}

ProjPolygon kasner_inscribed(const ProjPolygon& p) {
  if (p.size() != 5) throw Error(ErrorKind::kUnsupportedOrder, "the inscribed conic is defined for pentagons");
  std::array<HomogeneousTriple, 5> sides = {join(p[0], p[1]), join(p[1], p[2]), join(p[2], p[3]), join(p[3], p[4]),
                                            join(p[4], p[0])};
  const Conic c = conic_tangent_to_lines(sides);
  if (c.degenerate()) throw Error(ErrorKind::kNoUniqueConic, "inscribed conic is degenerate");
  std::vector<HomogeneousTriple> out;
  for (const auto& l : sides) out.push_back(c.pole(l));
  return ProjPolygon(std::move(out));
}

double kasner_commutation_defect(const ProjPolygon& p, long shift) {
  const auto lhs = pentagram_map(kasner_inscribed(p)).affine();
  const auto rhs_poly = kasner_inscribed(pentagram_map(p));
  double d = 0.0;
  for (long i = 0; i < static_cast<long>(lhs.size()); ++i) {
    d = std::max(d, (lhs[static_cast<std::size_t>(i)] - rhs_poly[i + shift].affine()).norm());
  }
  return d;
}

namespace {

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

bool strictly_convex(const std::vector<Vec2>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = v[(i + 1) % n] - v[i];
    const Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
    if (!(cross2(e0, e1) > 1e-3 * e0.norm() * e1.norm())) return false;
  }
  return true;
}

}  // namespace

ProjPolygon random_convex_polygon(std::size_t n, Rng& rng) {
  if (n < 5) throw Error(ErrorKind::kInvalidArgument, "polygon needs at least 5 vertices");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  // Radial jitter shrinks with n so that a convex draw stays likely.
  const double jitter = 0.3 * std::min(1.0, 36.0 / static_cast<double>(n * n));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const double offset = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    std::vector<Vec2> pts;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = offset + (static_cast<double>(i) + uniform(rng, -0.35, 0.35)) * step;
      const double r = uniform(rng, 1.0 - jitter, 1.0 + jitter);
      pts.emplace_back(r * std::cos(a), r * std::sin(a));
    }
    if (strictly_convex(pts)) return ProjPolygon::from_affine(pts);
  }
  throw Error(ErrorKind::kSolverFailure, "no strictly convex draw in 10000 attempts");
}

Mat3 random_projective_map(Rng& rng) {
  Mat3 h = Mat3::Identity();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 3; ++c) h(r, c) += uniform(rng, -0.3, 0.3);
  }
  h(2, 0) = uniform(rng, -0.2, 0.2);
  h(2, 1) = uniform(rng, -0.2, 0.2);
  return h;
}

}  // namespace geocheck::pentagram
