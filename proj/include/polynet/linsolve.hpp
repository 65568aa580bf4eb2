#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polynet/rational.hpp"

namespace polynet {

// Exact dense linear solvers. Both return the determinant of the input
// matrix along with the solution, so callers can certify nonsingularity
// claims instead of trusting them.

struct RationalSolve {
  std::vector<Rational> solution;
  Rational determinant;
};

// Gaussian elimination over the rationals. Rows are swapped when a pivot
// vanishes (any nonzero entry is an exact pivot); the determinant picks up
// the swap sign. Throws internal_error on a singular matrix.
inline RationalSolve solve_rational_gauss(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: rhs length mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve: matrix not square");

  int sign = 1;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw internal_error("solve: singular matrix (zero pivot column)");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
      sign = -sign;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      a[row][col] = 0;
      for (std::size_t j = col + 1; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  if (sign < 0) det = -det;

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational sum = b[i];
    for (std::size_t j = i + 1; j < n; ++j) sum -= a[i][j] * x[j];
    x[i] = sum / a[i][i];
  }
  return {std::move(x), std::move(det)};
}

struct IntegerBareissSolve {
  std::vector<Rational> solution;
  mpz_class determinant;
};

// Fraction-free Bareiss elimination for integer matrices: intermediate
// entries stay integral (they are minors of the input), which keeps big
// integer growth polynomial instead of the gcd churn of rational pivots.
inline IntegerBareissSolve solve_integer_bareiss(std::vector<std::vector<mpz_class>> a,
                                                 std::vector<mpz_class> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: rhs length mismatch");
  for (auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("solve: matrix not square");
  }
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);  // augment

  int sign = 1;
  mpz_class previous_pivot(1);
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw internal_error("solve: singular matrix (zero pivot column)");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      sign = -sign;
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      for (std::size_t j = col + 1; j <= n; ++j) {
        mpz_class t = a[row][j] * a[col][col] - a[row][col] * a[col][j];
        mpz_divexact(a[row][j].get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      a[row][col] = 0;
    }
    previous_pivot = a[col][col];
  }
  if (a[n - 1][n - 1] == 0) throw internal_error("solve: singular matrix (zero final pivot)");

  // After Bareiss the last pivot equals det(A) up to the swap sign.
  mpz_class det = a[n - 1][n - 1];
  if (sign < 0) det = -det;

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational sum(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) sum -= Rational(a[i][j]) * x[j];
    x[i] = sum / Rational(a[i][i]);
  }
  return {std::move(x), std::move(det)};
}

}  // namespace polynet
