#include <gtest/gtest.h>

#include "prodviab/rational.hpp"

using prodviab::Error;
using prodviab::Matrix;
using prodviab::Rational;
using prodviab::Vector;

TEST(Rational, ParsesTheStrictGrammar) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("+4/2"), Rational(2));
  EXPECT_EQ(Rational::parse("0/5"), Rational(0));
  for (const char* bad : {"", "1/0", "1.5", " 1", "1 ", "/2", "2/", "--1", "1/-2", "abc", "1e3"})
    EXPECT_FALSE(Rational::try_parse(bad).has_value()) << bad;
  EXPECT_THROW((void)Rational::parse("x"), Error);
}

TEST(Rational, PrintsCanonically) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(8, 4).str(), "2");
  EXPECT_TRUE(Rational(8, 4).is_integer());
  EXPECT_EQ(prodviab::format_vector(Vector{Rational(1, 3), Rational(-2)}), "(1/3, -2)");
}

TEST(Rational, MixedBigArithmeticStaysExact) {
  Rational a = Rational::parse("123456789012345678901234567890/7");
  Rational b = a * a - a * a + Rational(1, 3);
  EXPECT_EQ(b, Rational(1, 3));
  Rational acc;
  for (int k = 1; k <= 50; ++k) acc += Rational(1, k * (k + 1));
  EXPECT_EQ(acc, Rational(50, 51));
}

TEST(Matrix, MultiplyAndTranspose) {
  const Matrix m{{1, 2}, {3, 4}, {5, 6}};
  EXPECT_EQ(prodviab::multiply(m, Vector{1, -1}), (Vector{-1, -1, -1}));
  EXPECT_EQ(prodviab::left_multiply(Vector{1, 0, 1}, m), (Vector{6, 8}));
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_EQ(m.col_vector(1), (Vector{2, 4, 6}));
}
