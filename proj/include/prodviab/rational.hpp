#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prodviab/error.hpp"

namespace prodviab {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral N, std::integral D>
  Rational(N num, D den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Grammar: optional sign, digits, optionally '/' and digits with a nonzero denominator.
  [[nodiscard]] static auto try_parse(std::string_view text) -> std::optional<Rational> {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    auto digits = [&](std::string& out) {
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out.push_back(text[pos++]);
      return pos > start;
    };
    std::string num;
    std::string den = "1";
    if (!digits(num)) return std::nullopt;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      den.clear();
      if (!digits(den)) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    mpz_class d(den, 10);
    if (d == 0) return std::nullopt;
    mpz_class n(num, 10);
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
  }

  [[nodiscard]] static auto parse(std::string_view text) -> Rational {
    auto r = try_parse(text);
    if (!r) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    return *r;
  }

  /// "n" for integers, "n/d" otherwise.
  [[nodiscard]] auto str() const -> std::string { return value_.get_str(10); }
  [[nodiscard]] auto to_double() const -> double { return value_.get_d(); }

  [[nodiscard]] auto sign() const -> int { return sgn(value_); }
  [[nodiscard]] auto is_zero() const -> bool { return sign() == 0; }
  [[nodiscard]] auto is_positive() const -> bool { return sign() > 0; }
  [[nodiscard]] auto is_negative() const -> bool { return sign() < 0; }
  [[nodiscard]] auto is_integer() const -> bool { return value_.get_den() == 1; }
  [[nodiscard]] auto numerator() const -> mpz_class { return value_.get_num(); }
  [[nodiscard]] auto denominator() const -> mpz_class { return value_.get_den(); }
  [[nodiscard]] auto abs() const -> Rational { return Rational(mpq_class(::abs(value_)), Canonical{}); }
  [[nodiscard]] auto raw() const -> const mpq_class& { return value_; }

  auto operator+=(const Rational& o) -> Rational& { value_ += o.value_; return *this; }
  auto operator-=(const Rational& o) -> Rational& { value_ -= o.value_; return *this; }
  auto operator*=(const Rational& o) -> Rational& { value_ *= o.value_; return *this; }
  auto operator/=(const Rational& o) -> Rational& {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    value_ /= o.value_;
    return *this;
  }
  /// this -= a * b without an intermediate Rational.
  void sub_mul(const Rational& a, const Rational& b) { value_ -= a.value_ * b.value_; }
  void add_mul(const Rational& a, const Rational& b) { value_ += a.value_ * b.value_; }

  friend auto operator+(Rational a, const Rational& b) -> Rational { return a += b; }
  friend auto operator-(Rational a, const Rational& b) -> Rational { return a -= b; }
  friend auto operator*(Rational a, const Rational& b) -> Rational { return a *= b; }
  friend auto operator/(Rational a, const Rational& b) -> Rational { return a /= b; }
  friend auto operator-(const Rational& a) -> Rational { return Rational(mpq_class(-a.value_), Canonical{}); }

  friend auto operator==(const Rational& a, const Rational& b) -> bool { return cmp(a.value_, b.value_) == 0; }
  friend auto operator<=>(const Rational& a, const Rational& b) -> std::strong_ordering {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend auto operator<<(std::ostream& os, const Rational& r) -> std::ostream& { return os << r.str(); }

 private:
  struct Canonical {};
  Rational(mpq_class value, Canonical /*unused*/) : value_(std::move(value)) {}

  mpq_class value_{0};
};

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  [[nodiscard]] static auto identity(std::size_t n) -> Matrix {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] auto rows() const -> std::size_t { return rows_; }
  [[nodiscard]] auto cols() const -> std::size_t { return cols_; }
  [[nodiscard]] auto square() const -> bool { return rows_ == cols_; }

  [[nodiscard]] auto operator()(std::size_t i, std::size_t j) -> Rational& { return data_[i * cols_ + j]; }
  [[nodiscard]] auto operator()(std::size_t i, std::size_t j) const -> const Rational& {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] auto row(std::size_t i) const -> std::span<const Rational> {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] auto row(std::size_t i) -> std::span<Rational> { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] auto row_vector(std::size_t i) const -> Vector { return {row(i).begin(), row(i).end()}; }
  [[nodiscard]] auto col_vector(std::size_t j) const -> Vector {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  [[nodiscard]] auto transpose() const -> Matrix {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix on the given row and column index lists.
  [[nodiscard]] auto select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const -> Matrix {
    Matrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
  }

  friend auto operator==(const Matrix& a, const Matrix& b) -> bool {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

[[nodiscard]] inline auto dot(std::span<const Rational> a, std::span<const Rational> b) -> Rational {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add_mul(a[i], b[i]);
  return s;
}

[[nodiscard]] inline auto multiply(const Matrix& m, std::span<const Rational> x) -> Vector {
  if (m.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimensions");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), x);
  return out;
}

/// Row vector times matrix: (x^T M)_j.
[[nodiscard]] inline auto left_multiply(std::span<const Rational> x, const Matrix& m) -> Vector {
  if (m.rows() != x.size()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix dimensions");
  Vector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j].add_mul(x[i], m(i, j));
  }
  return out;
}

[[nodiscard]] inline auto sum(std::span<const Rational> v) -> Rational {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

[[nodiscard]] inline auto all_positive(std::span<const Rational> v) -> bool {
  for (const auto& x : v)
    if (!x.is_positive()) return false;
  return true;
}

[[nodiscard]] inline auto all_nonnegative(std::span<const Rational> v) -> bool {
  for (const auto& x : v)
    if (x.is_negative()) return false;
  return true;
}

/// "(a, b, c)"
[[nodiscard]] inline auto format_vector(std::span<const Rational> v) -> std::string {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace prodviab
