#include "geocheck/linalg.hpp"

#include "geocheck/error.hpp"

#include <utility>

namespace geocheck {

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

BigInt lcm_of_denominators(const RationalVector& row) {
  BigInt l = 1;
  for (const auto& x : row) {
    const BigInt d = boost::multiprecision::denominator(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

IntMatrix to_integer_rows(const RationalMatrix& m) {
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    const BigInt scale = lcm_of_denominators(row);
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (const auto& x : row) {
      r.push_back(boost::multiprecision::numerator(x) *
                  (scale / boost::multiprecision::denominator(x)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct Elimination {
  IntMatrix rows;
  std::vector<std::size_t> pivot_columns;
  int row_swaps = 0;
};

// Bareiss elimination restricted to the first `pivot_cols` columns. Each
// division is exact by Sylvester's identity.
Elimination bareiss(IntMatrix m, std::size_t pivot_cols) {
  Elimination e;
  const std::size_t n_rows = m.size();
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < n_rows; ++c) {
    std::size_t pivot = r;
    while (pivot < n_rows && m[pivot][c] == 0) ++pivot;
    if (pivot == n_rows) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      ++e.row_swaps;
    }
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      for (std::size_t j = c + 1; j < m[i].size(); ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / previous;
      }
      m[i][c] = 0;
    }
    previous = m[r][c];
    e.pivot_columns.push_back(c);
    ++r;
  }
  e.rows = std::move(m);
  return e;
}

}  // namespace

RationalVector solve_linear_exact(const RationalMatrix& matrix, const RationalVector& rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "rhs size does not match matrix");
  }
  RationalMatrix augmented = matrix;
  for (std::size_t i = 0; i < n; ++i) {
    if (augmented[i].size() != n) {
      throw Error(ErrorKind::kInvalidArgument, "matrix is not square");
    }
    augmented[i].push_back(rhs[i]);
  }
  const Elimination e = bareiss(to_integer_rows(augmented), n);
  if (e.pivot_columns.size() < n) throw SingularSystemError(e.pivot_columns.size(), n);

  // Back substitution over the rationals on the triangular integer system.
  RationalVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc{e.rows[k][n]};
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(e.rows[k][j]) * x[j];
    x[k] = acc / Rational(e.rows[k][k]);
  }
  return x;
}

Rational determinant_exact(const RationalMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return Rational(1);
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorKind::kInvalidArgument, "matrix is not square");
  }
  // Row scaling by integers multiplies the determinant; undo it at the end.
  Rational scale_product = 1;
  for (const auto& row : matrix) scale_product *= Rational(lcm_of_denominators(row));
  const Elimination e = bareiss(to_integer_rows(matrix), n);
  if (e.pivot_columns.size() < n) return Rational(0);
  Rational det{e.rows[n - 1][n - 1]};
  if (e.row_swaps % 2 != 0) det = -det;
  return det / scale_product;
}

std::size_t rank_exact(const RationalMatrix& matrix) {
  if (matrix.empty()) return 0;
  return bareiss(to_integer_rows(matrix), matrix.front().size()).pivot_columns.size();
}

}  // namespace geocheck
