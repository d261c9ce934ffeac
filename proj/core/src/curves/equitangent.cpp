#include "geocheck/curves/equitangent.hpp"

#include "geocheck/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

namespace geocheck::curves {

using std::numbers::pi;

ChordState ChordState::parse(std::string_view text) {
  std::string digits;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
    } else if (ch != '(' && ch != ')' && ch != ',' && ch != ' ') {
      throw Error(ErrorKind::kParse, "bad chord state: " + std::string(text));
    }
  }
  if (digits.size() != 6) throw Error(ErrorKind::kParse, "chord state needs three digit pairs: " + std::string(text));
  auto d = [&](int i) { return digits[i] - '0'; };
  ChordState s{d(0), d(1), d(2), d(4)};
  if (d(3) != d(2) + 1 || d(5) != d(4) + 1) {
    throw Error(ErrorKind::kParse, "support directions must name consecutive vertices: " + std::string(text));
  }
  return s;
}

std::string ChordState::str() const {
  auto n = [](int v) { return std::to_string(v); };
  return "(" + n(a) + n(b) + "," + n(dir_a) + n(dir_a + 1) + "," + n(dir_b) + n(dir_b + 1) + ")";
}

std::vector<Vec2> symmetric_dodecagon(double r_odd, double r_even) {
  const double ratio = r_even / r_odd;
  const double c = std::cos(pi / 6.0);
  if (!(r_odd > 0.0) || !(ratio > c && ratio < 1.0 / c)) {
    throw Error(ErrorKind::kInvalidArgument, "dodecagon radii must be positive with ratio in (cos pi/6, 1/cos pi/6)");
  }
  std::vector<Vec2> v;
  for (int k = 1; k <= 12; ++k) {
    const double r = k % 2 == 1 ? r_odd : r_even;
    const double t = (k - 1) * pi / 6.0;
    v.emplace_back(r * std::cos(t), r * std::sin(t));
  }
  return v;
}

std::vector<ChordState> default_equitangent_schedule() {
  std::vector<ChordState> s;
  for (const char* t : {"(15,12,56)", "(25,12,56)", "(25,23,56)", "(35,23,56)", "(35,34,56)", "(36,34,56)",
                        "(36,34,67)", "(37,34,67)", "(37,34,78)"}) {
    s.push_back(ChordState::parse(t));
  }
  return s;
}

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }
double angle_between(const Vec2& a, const Vec2& b) { return std::atan2(std::abs(cross(a, b)), a.dot(b)); }

struct Poly {
  const std::vector<Vec2>& v;
  int n() const { return static_cast<int>(v.size()); }
  int wrap(int label) const { return ((label - 1) % n() + n()) % n(); }
  const Vec2& vertex(int label) const { return v[wrap(label)]; }
  double edge_angle(int label) const {
    const Vec2 d = vertex(label + 1) - vertex(label);
    return std::atan2(d.y(), d.x());
  }
};

/// Continuous state: endpoint positions and support-line angles.
struct Pose {
  Vec2 a, b;
  double ang_a, ang_b;
};

Pose at(const Poly& p, const ChordState& s) {
  return {p.vertex(s.a), p.vertex(s.b), p.edge_angle(s.dir_a), p.edge_angle(s.dir_b)};
}

double angle_diff(double to, double from) {
  double d = std::remainder(to - from, 2.0 * pi);
  return d;
}

Pose lerp(const Pose& x, const Pose& y, double s) {
  return {x.a + s * (y.a - x.a), x.b + s * (y.b - x.b), x.ang_a + s * angle_diff(y.ang_a, x.ang_a),
          x.ang_b + s * angle_diff(y.ang_b, x.ang_b)};
}

/// One element changes; endpoints move one vertex forward along the edge their
/// direction names, directions turn to the next edge at the endpoint's vertex.
bool valid_transition(const Poly& p, const ChordState& x, const ChordState& y) {
  const int changed = (x.a != y.a) + (x.b != y.b) + (x.dir_a != y.dir_a) + (x.dir_b != y.dir_b);
  if (changed != 1) return false;
  auto same = [&](int u, int v) { return p.wrap(u) == p.wrap(v); };
  if (x.a != y.a) return same(y.a, x.a + 1) && same(x.dir_a, x.a);
  if (x.b != y.b) return same(y.b, x.b + 1) && same(x.dir_b, x.b);
  if (x.dir_a != y.dir_a) return same(y.dir_a, x.dir_a + 1) && same(x.a, y.dir_a);
  return same(y.dir_b, x.dir_b + 1) && same(x.b, y.dir_b);
}

bool supports(const Poly& p, const Vec2& q, double ang, double tol) {
  const Vec2 d(std::cos(ang), std::sin(ang));
  for (const Vec2& v : p.v) {
    if (cross(d, v - q) < -tol) return false;
  }
  return true;
}

}  // namespace

EquitangentTrace equitangent_replay(const std::vector<Vec2>& polygon, const std::vector<ChordState>& schedule,
                                    int samples_per_step) {
  if (polygon.size() < 3) throw Error(ErrorKind::kInvalidArgument, "polygon needs at least 3 vertices");
  if (schedule.size() < 2) throw Error(ErrorKind::kInvalidSchedule, "schedule needs at least two states");
  if (samples_per_step < 1) throw Error(ErrorKind::kInvalidArgument, "samples_per_step must be positive");
  const Poly p{polygon};
  double scale = 0.0;
  for (const Vec2& v : polygon) scale = std::max(scale, v.norm());
  const double tol = 1e-12 * scale;

  EquitangentTrace trace;
  trace.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < schedule.size(); ++k) {
    if (!valid_transition(p, schedule[k], schedule[k + 1])) {
      throw Error(ErrorKind::kInvalidSchedule, "step " + std::to_string(k + 1) + " " + schedule[k].str() + " -> " +
                                                   schedule[k + 1].str() + " does not vary exactly one element");
    }
    const Pose x = at(p, schedule[k]);
    const Pose y = at(p, schedule[k + 1]);
    for (int i = 0; i <= samples_per_step; ++i) {
      if (i == 0 && k > 0) continue;
      const double s = static_cast<double>(i) / samples_per_step;
      const Pose q = lerp(x, y, s);
      if (!supports(p, q.a, q.ang_a, tol) || !supports(p, q.b, q.ang_b, tol)) {
        throw Error(ErrorKind::kInvalidSchedule,
                    "step " + std::to_string(k + 1) + ": support condition fails at s = " + std::to_string(s));
      }
      const Vec2 da(std::cos(q.ang_a), std::sin(q.ang_a));
      const Vec2 db(std::cos(q.ang_b), std::sin(q.ang_b));
      const double den = cross(da, db);
      if (std::abs(den) < 1e-14) throw Error(ErrorKind::kInvalidSchedule, "support lines parallel at step " + std::to_string(k + 1));
      const double t = cross(q.b - q.a, db) / den;
      EquitangentSample smp;
      smp.step = static_cast<int>(k);
      smp.s = s;
      smp.a = q.a;
      smp.b = q.b;
      smp.c = q.a + t * da;
      smp.segment_a = (smp.c - smp.a).norm();
      smp.segment_b = (smp.c - smp.b).norm();
      smp.margin = angle_between(smp.a - smp.b, smp.c - smp.b) - angle_between(smp.b - smp.a, smp.c - smp.a);
      trace.min_margin = std::min(trace.min_margin, smp.margin);
      trace.samples.push_back(smp);
    }
  }
  const Pose first = at(p, schedule.front());
  const Pose last = at(p, schedule.back());
  const double rot = pi / 3.0;
  const Eigen::Rotation2Dd r(rot);
  trace.closure_residual = std::max({(r * first.a - last.a).norm(), (r * first.b - last.b).norm(),
                                     std::abs(angle_diff(first.ang_a + rot, last.ang_a)),
                                     std::abs(angle_diff(first.ang_b + rot, last.ang_b))});
  return trace;
}

}  // namespace geocheck::curves
