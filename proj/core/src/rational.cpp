#include "geocheck/rational.hpp"

#include "geocheck/error.hpp"

#include <cmath>
#include <string>

namespace geocheck {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorKind::kParse, "empty integer");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::kParse, "bad digit in '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::kParse, "zero denominator");
  return make_rational(num, den);
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite value has no exact rational");
  }
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // 53 significant bits fit in an int64 after scaling.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational r{BigInt(scaled)};
  if (exponent > 0) {
    r *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    r /= Rational(BigInt(1) << -exponent);
  }
  return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace geocheck
