#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "prodviab/rational.hpp"

namespace prodviab {

/// Determinant by fraction-free (Bareiss) elimination. Rows are first scaled to
/// integers by the lcm of their denominators.
[[nodiscard]] inline auto determinant(const Matrix& a) -> Rational {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).raw().get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = a(i, j).raw();
      m[i][j] = v.get_num() * (l / v.get_den());
    }
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  mpq_class det(m[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return Rational(det);
}

/// Determinant of the principal submatrix on `idx`.
[[nodiscard]] inline auto principal_minor(const Matrix& a, std::span<const std::size_t> idx) -> Rational {
  return determinant(a.select(idx, idx));
}

/// Reduced row echelon form in place; returns pivot columns.
inline auto rref(Matrix& m) -> std::vector<std::size_t> {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j).sub_mul(f, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

[[nodiscard]] inline auto rank(Matrix m) -> std::size_t { return rref(m).size(); }

/// Unique solution of a square nonsingular system, or nullopt when singular.
[[nodiscard]] inline auto solve_square(const Matrix& a, std::span<const Rational> b) -> std::optional<Vector> {
  if (!a.square() || a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "solve_square dimensions");
  const std::size_t n = a.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto piv = rref(aug);
  if (piv.size() != n || piv.back() != n - 1) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

/// Basis of the right null space {x : a x = 0}.
[[nodiscard]] inline auto null_space(const Matrix& a) -> std::vector<Vector> {
  Matrix m = a;
  const auto piv = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace prodviab
