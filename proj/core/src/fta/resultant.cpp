#include "geocheck/fta/resultant.hpp"

#include "geocheck/error.hpp"
#include "geocheck/linalg.hpp"

#include <Eigen/LU>

namespace geocheck::fta {

Rational sylvester_resultant(const RationalPoly& p, const RationalPoly& q) {
  if (p.degree() < 1 || q.degree() < 1) throw Error(ErrorKind::kInvalidArgument, "resultant needs degrees >= 1");
  return determinant_exact(sylvester_matrix(p.coeffs(), q.coeffs()));
}

namespace {

bool negative_sign(long n) { return (n * (n - 1) / 2) % 2 != 0; }

}  // namespace

Rational discriminant(const RationalPoly& p) {
  if (p.degree() < 2) throw Error(ErrorKind::kInvalidArgument, "discriminant needs degree >= 2");
  const Rational r = sylvester_resultant(p, p.derivative()) / p.leading();
  return negative_sign(p.degree()) ? Rational(-r) : r;
}

namespace {

void check_complex(const ComplexPoly& p, std::size_t min_size) {
  if (p.size() < min_size || p.back() == Complex(0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "polynomial degree too small or leading coefficient zero");
  }
}

}  // namespace

Complex sylvester_resultant(const ComplexPoly& p, const ComplexPoly& q) {
  check_complex(p, 2);
  check_complex(q, 2);
  const auto s = sylvester_matrix(p, q);
  const auto n = static_cast<Eigen::Index>(s.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = s[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m.partialPivLu().determinant();
}

Complex discriminant(const ComplexPoly& p) {
  check_complex(p, 3);
  const long n = static_cast<long>(p.size()) - 1;
  const Complex r = sylvester_resultant(p, derivative(p)) / p.back();
  return negative_sign(n) ? -r : r;
}

}  // namespace geocheck::fta
