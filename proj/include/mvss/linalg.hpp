#pragma once

#include "mvss/rational.hpp"

#include <optional>
#include <vector>

namespace mvss {

using RMatrix = std::vector<RVector>;  // row-major

RVector add(const RVector& a, const RVector& b);
RVector sub(const RVector& a, const RVector& b);
RVector scale(const RVector& a, const Rational& s);
/// a + s * b
RVector axpy(const RVector& a, const Rational& s, const RVector& b);
Rational dot(const RVector& a, const RVector& b);
Rational norm2(const RVector& a);
bool is_zero(const RVector& a);

/// Rank of the row set, exact Gaussian elimination.
std::size_t rank(RMatrix rows);
/// Affine rank of a point set: dimension of its affine hull (-1 for empty).
int affine_dimension(const std::vector<RPoint>& pts);
/// Basis of {x : row . x = 0 for all rows}, columns count = dim.
std::vector<RVector> nullspace(RMatrix rows, std::size_t dim);
/// Unique solution of a square nonsingular system, nullopt when singular.
std::optional<RVector> solve(RMatrix a, RVector b);

/// Exact determinant of a square rational matrix; rows are scaled to integer
/// rows first and the integer determinant is computed fraction-free (Bareiss).
Rational determinant(const RMatrix& m);

/// Scale to the primitive integer vector with the same direction
/// (positive multiple). Zero vector maps to zero.
std::vector<Integer> primitive_integer_direction(const RVector& v);
RVector to_rvector(const std::vector<Integer>& v);

/// Lexicographic comparison.
bool lex_less(const RVector& a, const RVector& b);

}  // namespace mvss
