#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prodviab/core.hpp"
#include "prodviab/linalg.hpp"
#include "prodviab/lp.hpp"

namespace prodviab {

/// Minor m is det of the top-left m x m block; each is computed on its own.
[[nodiscard]] inline auto leading_principal_minors(const Matrix& a) -> Vector {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "minors of non-square matrix");
  Vector out;
  std::vector<std::size_t> idx;
  for (std::size_t m = 0; m < a.rows(); ++m) {
    idx.push_back(m);
    out.push_back(principal_minor(a, idx));
  }
  return out;
}

inline constexpr std::size_t kMaxPrincipalMinorDim = 16;

/// Subsets in increasing cardinality; stops at the first non-positive minor.
[[nodiscard]] inline auto all_principal_minors_positive(const Matrix& a) -> bool {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "minors of non-square matrix");
  const std::size_t n = a.rows();
  if (n > kMaxPrincipalMinorDim) throw Error(ErrorCode::DimensionTooLarge, "principal minor enumeration limited to 16");
  for (std::size_t s = 1; s <= n; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      if (!principal_minor(a, idx).is_positive()) return false;
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

inline void require_z_plus(const Matrix& a) {
  if (!ZMatrix::is_z_plus(a)) throw Error(ErrorCode::NotZPlus, "matrix is not of class Z+");
}

[[nodiscard]] inline auto hawkins_simon(const Matrix& a) -> bool {
  require_z_plus(a);
  for (const auto& m : leading_principal_minors(a))
    if (!m.is_positive()) return false;
  return true;
}

struct PqddCertificate {
  Vector d;
};

/// d_i |a_ii| > sum_{j != i} d_j |a_ij| for every row.
[[nodiscard]] inline auto verify_pqdd_rows(const Matrix& a, std::span<const Rational> d) -> bool {
  if (d.size() != a.rows() || !all_positive(d)) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational off;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (j != i) off.add_mul(d[j], a(i, j).abs());
    if (!(d[i] * a(i, i).abs() > off)) return false;
  }
  return true;
}

/// d_j |a_jj| > sum_{i != j} d_i |a_ij| for every column.
[[nodiscard]] inline auto verify_pqdd_columns(const Matrix& a, std::span<const Rational> d) -> bool {
  return verify_pqdd_rows(a.transpose(), d);
}

/// LP: d >= 1, d_i a_ii - sum_{j != i} d_j |a_ij| >= 1, minimize sum d.
[[nodiscard]] inline auto find_pqdd(const Matrix& a) -> std::optional<PqddCertificate> {
  require_z_plus(a);
  const std::size_t n = a.rows();
  LinearProgram lp(n);
  for (std::size_t j = 0; j < n; ++j) {
    lp.objective[j] = -1;
    lp.bounds[j].lower = Rational(1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = j == i ? a(i, i) : -a(i, j).abs();
    lp.add_ge(std::move(row), 1);
  }
  const auto out = solve(lp);
  if (out.status != LpStatus::Optimal) return std::nullopt;
  if (!verify_pqdd_rows(a, out.primal)) throw Error(ErrorCode::InternalError, "p.q.d.d. certificate failed to verify");
  return PqddCertificate{out.primal};
}

/// Some x >= 0 with A x >> 0, found as A x >= 1.
[[nodiscard]] inline auto find_positive_image(const Matrix& a) -> std::optional<Vector> {
  LinearProgram lp(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) lp.add_ge(a.row_vector(i), 1);
  const auto out = solve(lp);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  return out.primal;
}

/// Some x >= 0 with A x = y.
[[nodiscard]] inline auto nonnegative_solution(const Matrix& a, std::span<const Rational> y) -> std::optional<Vector> {
  if (y.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  LinearProgram lp(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) lp.add_eq(a.row_vector(i), y[i]);
  const auto out = solve(lp);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  return out.primal;
}

/// Every y >= 0 has a solution x >= 0; decided on the unit vectors, which generate the orthant.
[[nodiscard]] inline auto solvable_for_all_nonnegative(const Matrix& a) -> bool {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector e(a.rows());
    e[i] = 1;
    if (!nonnegative_solution(a, e)) return false;
  }
  return true;
}

}  // namespace prodviab
