#include "geocheck/curves/support_oval.hpp"

#include "geocheck/error.hpp"
#include "geocheck/roots.hpp"

#include <boost/math/special_functions/ellint_2.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geocheck::curves {

using std::numbers::pi;

SupportOval SupportOval::harmonic(double c0, std::vector<double> cos_terms, std::vector<double> sin_terms,
                                  Vec2 centre) {
  SupportOval o;
  o.c0_ = c0;
  const std::size_t n = std::max(cos_terms.size(), sin_terms.size());
  cos_terms.resize(n, 0.0);
  sin_terms.resize(n, 0.0);
  o.cos_ = std::move(cos_terms);
  o.sin_ = std::move(sin_terms);
  o.centre_ = centre;
  o.validate();
  return o;
}

SupportOval SupportOval::circle(double r, Vec2 centre) { return harmonic(r, {}, {}, centre); }

SupportOval SupportOval::ellipse(double a, double b, Vec2 centre) {
  SupportOval o;
  o.ellipse_ = true;
  o.a_ = a;
  o.b_ = b;
  o.centre_ = centre;
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::kInvalidArgument, "ellipse semi-axes must be positive");
  o.validate();
  return o;
}

void SupportOval::validate() const {
  if (!std::isfinite(centre_.x()) || !std::isfinite(centre_.y())) {
    throw Error(ErrorKind::kInvalidArgument, "oval centre must be finite");
  }
  if (!strictly_convex()) throw Error(ErrorKind::kPrecondition, "support function fails h + h'' > 0");
}

double SupportOval::h(double t) const {
  if (ellipse_) return std::sqrt(a_ * a_ * std::cos(t) * std::cos(t) + b_ * b_ * std::sin(t) * std::sin(t));
  double v = c0_;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double k = static_cast<double>(i + 2);
    v += cos_[i] * std::cos(k * t) + sin_[i] * std::sin(k * t);
  }
  return v;
}

double SupportOval::dh(double t) const {
  if (ellipse_) return (b_ * b_ - a_ * a_) * std::sin(2.0 * t) / (2.0 * h(t));
  double v = 0.0;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double k = static_cast<double>(i + 2);
    v += k * (-cos_[i] * std::sin(k * t) + sin_[i] * std::cos(k * t));
  }
  return v;
}

double SupportOval::d2h(double t) const {
  if (ellipse_) {
    const double hv = h(t);
    const double q1 = (b_ * b_ - a_ * a_) * std::sin(2.0 * t);
    const double q2 = 2.0 * (b_ * b_ - a_ * a_) * std::cos(2.0 * t);
    return q2 / (2.0 * hv) - q1 * q1 / (4.0 * hv * hv * hv);
  }
  double v = 0.0;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double k = static_cast<double>(i + 2);
    v -= k * k * (cos_[i] * std::cos(k * t) + sin_[i] * std::sin(k * t));
  }
  return v;
}

Vec2 SupportOval::normal(double t) { return {std::cos(t), std::sin(t)}; }
Vec2 SupportOval::tangent(double t) { return {-std::sin(t), std::cos(t)}; }

double SupportOval::support(double t) const { return h(t) + centre_.dot(normal(t)); }

Vec2 SupportOval::point(double t) const { return centre_ + h(t) * normal(t) + dh(t) * tangent(t); }

double SupportOval::integral_h(double t) const {
  if (!ellipse_) {
    double v = c0_ * t;
    for (std::size_t i = 0; i < cos_.size(); ++i) {
      const double k = static_cast<double>(i + 2);
      v += (cos_[i] * std::sin(k * t) - sin_[i] * (std::cos(k * t) - 1.0)) / k;
    }
    return v;
  }
  namespace bm = boost::math;
  if (a_ >= b_) {
    const double k = std::sqrt(1.0 - (b_ * b_) / (a_ * a_));
    return a_ * bm::ellint_2(k, t);
  }
  // sqrt(a² cos² t + b² sin² t) = b sqrt(1 − k² sin²(t − π/2)).
  const double k = std::sqrt(1.0 - (a_ * a_) / (b_ * b_));
  return b_ * (bm::ellint_2(k, t - pi / 2.0) - bm::ellint_2(k, -pi / 2.0));
}

double SupportOval::arc_length(double t0, double t1) const {
  // ∫ (h + h″) = ∫ h + [h′].
  return integral_h(t1) - integral_h(t0) + dh(t1) - dh(t0);
}

bool SupportOval::strictly_convex(int n) const {
  for (int i = 0; i < n; ++i) {
    if (!(curvature_radius(2.0 * pi * i / n) > 0.0)) return false;
  }
  return true;
}

double SupportOval::scale() const {
  double s = 0.0;
  for (int i = 0; i < 256; ++i) s = std::max(s, point(2.0 * pi * i / 256).norm());
  return std::max(s, 1e-300);
}

bool nested(const SupportOval& outer, const SupportOval& inner, int n) {
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * pi * i / n;
    if (!(outer.support(t) > inner.support(t))) return false;
  }
  return true;
}

namespace {

constexpr int kSamples = 720;

/// argmax of g over a grid, then golden-section refinement.
std::pair<double, double> maximize(const auto& g) {
  double best_t = 0.0, best = g(0.0);
  for (int i = 1; i < kSamples; ++i) {
    const double t = 2.0 * pi * i / kSamples;
    const double v = g(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  double lo = best_t - 2.0 * pi / kSamples, hi = best_t + 2.0 * pi / kSamples;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = g(x1);
    }
  }
  const double t = 0.5 * (lo + hi);
  const double v = g(t);
  return v >= best ? std::pair{t, v} : std::pair{best_t, best};
}

}  // namespace

double exterior_margin(const SupportOval& oval, const Vec2& x) {
  return maximize([&](double t) { return x.dot(SupportOval::normal(t)) - oval.support(t); }).second;
}

std::pair<double, double> tangent_parameters(const SupportOval& oval, const Vec2& x) {
  auto g = [&](double t) { return x.dot(SupportOval::normal(t)) - oval.support(t); };
  const auto [t_star, g_star] = maximize(g);
  if (!(g_star > 1e-14 * oval.scale())) throw Error(ErrorKind::kPrecondition, "point is not outside the oval");
  // g(t* ± π) < 0 for any exterior point, so each half brackets one root.
  const double t1 = bisect(g, t_star - pi, t_star, g(t_star - pi));
  const double t2 = bisect(g, t_star, t_star + pi, g_star);
  return {t1, t2};
}

}  // namespace geocheck::curves
