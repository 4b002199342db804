#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "prodviab/linalg.hpp"

using namespace prodviab;

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(Matrix{{2, 1}, {1, 3}}), Rational(5));
  EXPECT_EQ(determinant(Matrix{{0, 1}, {1, 0}}), Rational(-1));
  EXPECT_EQ(determinant(Matrix{{Rational(1, 2), 1}, {1, 2}}), Rational(0));
  EXPECT_EQ(determinant(Matrix(0, 0)), Rational(1));
}

TEST(Determinant, AgreesWithLeibnizOnRandomRationalMatrices) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), size(1, 6), zero(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = zero(rng) == 0 ? Rational(0) : Rational(num(rng), den(rng));
    ASSERT_EQ(determinant(a), oracle::leibniz_det(a)) << "trial " << trial;
  }
}

TEST(Linalg, RankNullSpaceAndSolve) {
  const Matrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(a), 2u);
  const auto ns = null_space(a);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& v : multiply(a, ns.front())) EXPECT_TRUE(v.is_zero());
  EXPECT_FALSE(solve_square(a, Vector{1, 1, 1}).has_value());
  const Matrix b{{2, 1}, {1, 3}};
  const auto x = solve_square(b, Vector{3, 5});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (Vector{Rational(4, 5), Rational(7, 5)}));
}

TEST(Linalg, PrincipalMinorPicksRowsAndColumnsTogether) {
  const Matrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  const std::vector<std::size_t> idx{0, 2};
  EXPECT_EQ(principal_minor(a, idx), Rational(1 * 10 - 3 * 7));
}
