#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace geocheck {

/// Arbitrary-precision integer and fraction. cpp_rational keeps values in
/// lowest terms with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Boost's rational adaptor rejects a negative denominator, so the sign moves
/// to the numerator first.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}
inline Rational make_rational(long long num, long long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws Error(kParse) on malformed text.
Rational parse_rational(std::string_view text);

/// The exact binary value of a finite double.
Rational exact_from_double(double x);

double to_double(const Rational& r);

}  // namespace geocheck
