#pragma once

#include "geocheck/fta/poly.hpp"

#include <cstddef>
#include <vector>

namespace geocheck::fta {

/// Sylvester matrix of P (degree m) and Q (degree n): n shifted rows of P's
/// coefficients followed by m shifted rows of Q's, leading coefficients first.
template <class T>
std::vector<std::vector<T>> sylvester_matrix(const std::vector<T>& p, const std::vector<T>& q) {
  const std::size_t m = p.size() - 1, n = q.size() - 1, size = m + n;
  std::vector<std::vector<T>> s(size, std::vector<T>(size, T(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = p[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = q[n - k];
  }
  return s;
}

/// Exact resultant. Throws Error(kInvalidArgument) when either degree is < 1.
Rational sylvester_resultant(const RationalPoly& p, const RationalPoly& q);

/// (−1)^{n(n−1)/2} Res(P, P′) / lc(P). Throws for degree < 2.
Rational discriminant(const RationalPoly& p);

/// Floating counterparts via LU of the complex Sylvester matrix.
Complex sylvester_resultant(const ComplexPoly& p, const ComplexPoly& q);
Complex discriminant(const ComplexPoly& p);

}  // namespace geocheck::fta
