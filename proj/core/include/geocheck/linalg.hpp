#pragma once

#include "geocheck/rational.hpp"

#include <Eigen/Dense>

namespace geocheck {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;

/// Solves a square system exactly with Bareiss fraction-free elimination.
/// Rows are first scaled to integers, so every intermediate is an integer.
/// Throws SingularSystemError (carrying the rank) when the matrix is singular.
RationalVector solve_linear_exact(const RationalMatrix& matrix, const RationalVector& rhs);

/// Exact determinant via the same fraction-free elimination.
Rational determinant_exact(const RationalMatrix& matrix);

/// Rank of an exact matrix (any shape).
std::size_t rank_exact(const RationalMatrix& matrix);

}  // namespace geocheck
