#include "geocheck/sphere.hpp"

#include "geocheck/error.hpp"

#include <cmath>
#include <numbers>

namespace geocheck::sphere {

SphericalTriangle::SphericalTriangle(const Vec3& a, const Vec3& b, const Vec3& c) {
  const std::array<Vec3, 3> in{a, b, c};
  for (int i = 0; i < 3; ++i) {
    const double n = in[i].norm();
    if (!(n > 0.0)) throw Error(ErrorKind::kDegenerateInput, "zero vertex vector");
    v_[i] = in[i] / n;
  }
  for (int i = 0; i < 3; ++i) {
    const Vec3& p = v_[i];
    const Vec3& q = v_[(i + 1) % 3];
    if (p.cross(q).norm() < 1e-12) {
      throw Error(ErrorKind::kDegenerateInput, "coincident or antipodal vertices");
    }
  }
  if (std::abs(v_[0].dot(v_[1].cross(v_[2]))) < 1e-12) {
    throw Error(ErrorKind::kDegenerateInput, "vertices lie on one great circle");
  }
}

Vec3 altitude_pole(const SphericalTriangle& t, Vertex vertex) {
  const int k = static_cast<int>(vertex);
  const Vec3& p = t.vertex((k + 1) % 3);
  const Vec3& q = t.vertex((k + 2) % 3);
  const Vec3 pole = p.cross(q).cross(t.vertex(k));
  if (pole.norm() < 1e-12) {
    throw Error(ErrorKind::kDegenerateInput, "altitude undetermined: the vertex is a pole of the opposite side");
  }
  return pole.normalized();
}

Concurrency concurrency_check(const SphericalTriangle& t, CevianKind kind) {
  Concurrency out;
  const Vec3& a = t.a();
  const Vec3& b = t.b();
  const Vec3& c = t.c();
  if (kind == CevianKind::kAltitudes) {
    out.poles = {a.cross(b).cross(c), b.cross(c).cross(a), c.cross(a).cross(b)};
  } else {
    out.poles = {(a + b).cross(c), (b + c).cross(a), (c + a).cross(b)};
  }
  out.pole_sum = out.poles[0] + out.poles[1] + out.poles[2];
  Mat3 m;
  m << out.poles[0], out.poles[1], out.poles[2];
  out.residual = std::abs(m.determinant());

  // The common point is orthogonal to every pole; use the best-conditioned pair.
  Vec3 best = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    const Vec3 x = out.poles[i].cross(out.poles[(i + 1) % 3]);
    if (x.norm() > best.norm()) best = x;
  }
  if (best.norm() < 1e-300) {
    throw Error(ErrorKind::kDegenerateInput, "all poles are parallel; great circles coincide");
  }
  out.point = best.normalized();
  // Of the two antipodal intersection points report the one in the triangle's hemisphere.
  if (out.point.dot(a + b + c) < 0.0) out.point = -out.point;
  return out;
}

ExactVec3 cross(const ExactVec3& u, const ExactVec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

ExactVec3 operator+(const ExactVec3& u, const ExactVec3& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

ExactVec3 jacobi_sum_exact(const ExactVec3& a, const ExactVec3& b, const ExactVec3& c) {
  return cross(cross(a, b), c) + cross(cross(b, c), a) + cross(cross(c, a), b);
}

ExactVec3 median_sum_exact(const ExactVec3& a, const ExactVec3& b, const ExactVec3& c) {
  return cross(a + b, c) + cross(b + c, a) + cross(c + a, b);
}

Vec3 SpherePosition::unit() const {
  return {std::cos(latitude) * std::cos(longitude), std::cos(latitude) * std::sin(longitude),
          std::sin(latitude)};
}

TentLocus tent_locus(double radius, double leg, int count) {
  using std::numbers::pi;
  if (!(radius > 0.0) || !(leg > 0.0) || count < 0) {
    throw Error(ErrorKind::kInvalidArgument, "tent locus needs R > 0, d > 0, K >= 0");
  }
  if (!(leg < pi * radius / 2.0)) throw Error(ErrorKind::kInvalidArgument, "leg must be shorter than πR/2");
  TentLocus out;
  out.radius = radius;
  out.leg = leg;
  out.accumulation = -pi / 2.0 + leg / radius;
  for (int k = 1; k <= count; ++k) {
    const double c = leg / (2.0 * pi * k * radius);
    if (c > 1.0) continue;  // parallel of that circumference does not exist
    const double phi = leg / radius - std::acos(c);
    if (!out.latitudes.empty() && !(phi < out.latitudes.back())) {
      out.truncated = true;
      out.notice = "latitudes indistinct in double precision beyond k = " + std::to_string(k - 1);
      break;
    }
    out.latitudes.push_back(phi);
  }
  return out;
}

nlohmann::json to_json(const TentLocus& locus) {
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < locus.latitudes.size(); ++i) {
    const double phi = locus.latitudes[i];
    list.push_back({{"k", i + 1}, {"radians", phi}, {"degrees", phi * 180.0 / std::numbers::pi}});
  }
  nlohmann::json j = {{"radius_km", locus.radius},
                      {"leg_km", locus.leg},
                      {"north_pole", locus.north_pole},
                      {"latitudes", list},
                      {"accumulation",
                       {{"radians", locus.accumulation},
                        {"degrees", locus.accumulation * 180.0 / std::numbers::pi},
                        {"is_solution", false}}},
                      {"truncated", locus.truncated}};
  if (!locus.notice.empty()) j["notice"] = locus.notice;
  return j;
}

double verify_walk(const SpherePosition& start, double leg) {
  using std::numbers::pi;
  if (!(leg >= 0.0) || !(start.radius > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "walk needs d >= 0 and R > 0");
  }
  const double arc = leg / start.radius;
  const double south = start.latitude - arc;
  if (south < -pi / 2.0) throw Error(ErrorKind::kInvalidWalk, "southward leg passes the south pole");
  const double c = std::cos(south);
  if (c <= 0.0 || south == -pi / 2.0) {
    throw Error(ErrorKind::kInvalidWalk, "westward leg starts at the south pole");
  }
  SpherePosition end = start;
  end.longitude = start.longitude - leg / (start.radius * c);
  end.latitude = south + arc;
  if (end.latitude > pi / 2.0) throw Error(ErrorKind::kInvalidWalk, "northward leg passes the north pole");
  const Vec3 p = start.unit();
  const Vec3 q = end.unit();
  return start.radius * std::atan2(p.cross(q).norm(), p.dot(q));
}

}  // namespace geocheck::sphere
