#pragma once

#include "geocheck/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace geocheck::fta {

using Complex = std::complex<double>;

/// Exact polynomial, coefficients from the constant term up. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly from_ints(std::initializer_list<long long> coeffs);
  /// Monomial c·z^k.
  static RationalPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  /// −1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of z^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& z) const;
  double eval(double z) const;
  RationalPoly derivative() const;
  RationalPoly monic() const;
  std::vector<Complex> to_complex() const;
  std::string str(const std::string& var = "z") const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a);
  RationalPoly operator-() const;
  bool operator==(const RationalPoly&) const = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder. Throws Error(kInvalidArgument) for a zero divisor.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
/// Monic greatest common divisor (zero when both are zero).
RationalPoly gcd(RationalPoly a, RationalPoly b);
/// p / gcd(p, p′), made monic.
RationalPoly square_free_part(const RationalPoly& p);

/// Sturm chain p, p′, −rem(p, p′), … for a square-free p.
std::vector<RationalPoly> sturm_sequence(const RationalPoly& p);
/// Distinct real roots in (lo, hi] of the square-free p with chain `chain`.
int count_real_roots(const std::vector<RationalPoly>& chain, const Rational& lo, const Rational& hi);
/// Cauchy bound: every root satisfies |z| < bound.
Rational root_bound(const RationalPoly& p);

/// Disjoint intervals (lo, hi], each containing exactly one distinct real root,
/// narrowed by exact bisection until hi − lo <= width.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const RationalPoly& p, const Rational& width);
/// Distinct real roots, as doubles refined to full precision.
std::vector<double> real_roots(const RationalPoly& p);

/// Complex polynomial, constant term first.
using ComplexPoly = std::vector<Complex>;

Complex horner(const ComplexPoly& p, Complex z);
ComplexPoly derivative(const ComplexPoly& p);

}  // namespace geocheck::fta
