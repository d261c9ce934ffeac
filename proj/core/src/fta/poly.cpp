#include "geocheck/fta/poly.hpp"

#include "geocheck/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geocheck::fta {

namespace mp = boost::multiprecision;

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::from_ints(std::initializer_list<long long> coeffs) {
  std::vector<Rational> c;
  for (long long v : coeffs) c.push_back(make_rational(v));
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

const Rational& RationalPoly::leading() const {
  if (c_.empty()) throw Error(ErrorKind::kInvalidArgument, "zero polynomial has no leading coefficient");
  return c_.back();
}

Rational RationalPoly::operator()(const Rational& z) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * z + *it;
  return v;
}

double RationalPoly::eval(double z) const {
  double v = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * z + to_double(*it);
  return v;
}

RationalPoly RationalPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long long>(k));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (c_.empty()) return *this;
  return (Rational(1) / leading()) * *this;
}

std::vector<Complex> RationalPoly::to_complex() const {
  std::vector<Complex> out;
  for (const auto& x : c_) out.emplace_back(to_double(x), 0.0);
  return out;
}

std::string RationalPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (long k = degree(); k >= 0; --k) {
    const Rational& a = c_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const bool neg = a < 0;
    const Rational mag = neg ? Rational(-a) : a;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) s += geocheck::to_string(mag);
    if (k > 0) {
      if (!unit) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const Rational& s, const RationalPoly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= s;
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::kInvalidArgument, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RationalPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (long k = a.degree() - db; k >= 0; --k) {
    const Rational f = r[static_cast<std::size_t>(k + db)] / b.leading();
    q[static_cast<std::size_t>(k)] = f;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPoly square_free_part(const RationalPoly& p) {
  if (p.degree() < 1) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
  std::vector<RationalPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RationalPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

int sign_changes(const std::vector<RationalPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const Rational v = q(x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const std::vector<RationalPoly>& chain, const Rational& lo, const Rational& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Rational root_bound(const RationalPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  for (long k = 0; k < p.degree(); ++k) {
    const Rational r = mp::abs(p.coeffs()[static_cast<std::size_t>(k)] / p.leading());
    m = std::max(m, r);
  }
  return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const RationalPoly& p, const Rational& width) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() < 1) return out;
  const RationalPoly sf = square_free_part(p);
  const auto chain = sturm_sequence(sf);
  const Rational bound = root_bound(sf);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int n = count_real_roots(chain, lo, hi);
    if (n == 0) continue;
    if (n == 1 && hi - lo <= width) {
      out.emplace_back(lo, hi);
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> real_roots(const RationalPoly& p) {
  std::vector<double> out;
  const RationalPoly sf = square_free_part(p);
  const auto chain = sturm_sequence(sf);
  for (auto [lo, hi] : isolate_real_roots(p, Rational(1, 1024))) {
    // Exact bisection until the interval is below double resolution. A root
    // that lands on a right endpoint is returned exactly.
    bool exact = false;
    for (int it = 0; it < 200; ++it) {
      if (sf(hi) == 0) {
        exact = true;
        break;
      }
      const double dlo = to_double(lo), dhi = to_double(hi);
      if (dhi - dlo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(dlo), std::abs(dhi)) ||
          dhi - dlo < 1e-300) {
        break;
      }
      // Use a short dyadic midpoint to keep the rationals small.
      const Rational mid = exact_from_double(0.5 * (dlo + dhi));
      if (!(mid > lo && mid < hi)) break;
      if (count_real_roots(chain, lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(to_double(exact ? hi : (lo + hi) / 2));
  }
  return out;
}

Complex horner(const ComplexPoly& p, Complex z) {
  Complex v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * z + *it;
  return v;
}

ComplexPoly derivative(const ComplexPoly& p) {
  ComplexPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<double>(k));
  return d;
}

}  // namespace geocheck::fta
