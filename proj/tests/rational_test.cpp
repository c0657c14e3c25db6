#include <soq/rational.hpp>

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace soq {
namespace {

bool canonical(const Rational& r) {
  if (r.den() < 1) return false;
  if (r.is_zero()) return r.den() == 1;
  return boost::multiprecision::gcd(boost::multiprecision::abs(r.num()), r.den()) == 1;
}

TEST(Rational, NormalizeReducesByGcd) {
  const Rational r(6, 4);
  EXPECT_EQ(r.num(), 3);
  EXPECT_EQ(r.den(), 2);
}

TEST(Rational, NormalizeMovesSignToNumerator) {
  const Rational r(-2, -4);
  EXPECT_EQ(r, Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(3, -6).den(), 2);
}

TEST(Rational, ZeroIsZeroOverOne) {
  const Rational r(0, 7);
  EXPECT_EQ(r.num(), 0);
  EXPECT_EQ(r.den(), 1);
  EXPECT_EQ(Rational(0, -3), Rational());
}

TEST(Rational, ZeroDenominatorThrows) {
  try {
    Rational(1, 0);
    FAIL() << "expected zero_denominator";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::zero_denominator);
  }
}

TEST(Rational, FieldOps) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 2), Rational(1));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_EQ(Rational(-3, 4) / Rational(9, 8), Rational(-2, 3));
}

TEST(Rational, DivisionByZeroThrows) {
  try {
    (void)(Rational(1, 3) / Rational(0, 1));
    FAIL() << "expected division_by_zero";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::division_by_zero);
  }
  EXPECT_THROW((void)Rational().reciprocal(), error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2, 3), Rational(3, 5));
  EXPECT_EQ(Rational(4, 6) <=> Rational(2, 3), std::strong_ordering::equal);
}

TEST(Rational, TextForm) {
  EXPECT_EQ(Rational(6, 4).to_string(), "3/2");
  EXPECT_EQ(Rational(-4, 2).to_string(), "-2");
  EXPECT_EQ(Rational().to_string(), "0");
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("3/-9"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("+5/10"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/10").to_string(), "12345678901234567890123456789");
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "/", "1/", "/2", "1.5", "a", "1/2/3", " 1", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), error) << bad;
  }
  try {
    Rational::parse("1/0");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::zero_denominator);
  }
}

TEST(Rational, ParseDecimal) {
  EXPECT_EQ(Rational::parse_decimal("0.125"), Rational(1, 8));
  EXPECT_EQ(Rational::parse_decimal("-1.5"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse_decimal(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse_decimal("1/8"), Rational(1, 8));
  EXPECT_THROW(Rational::parse_decimal("1."), error);
  EXPECT_THROW(Rational::parse_decimal("."), error);
}

TEST(Rational, BitLengths) {
  EXPECT_EQ(bit_length(Integer(0)), 0u);
  EXPECT_EQ(bit_length(Integer(-8)), 4u);
  EXPECT_EQ(Rational(-5, 16).height_bits(), 5u);
  EXPECT_EQ(Rational(-5, 16).total_bits(), 8u);
}

TEST(RationalProperty, ClosureAndFieldAxioms) {
  testing::Sampler s(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = s.rational(50), b = s.rational(50), c = s.rational(50);
    EXPECT_EQ(a + (b + c), (a + b) + c);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Rational());
    for (const Rational& r : {a + b, a - b, a * b, -a}) EXPECT_TRUE(canonical(r));
    if (!b.is_zero()) {
      EXPECT_TRUE(canonical(a / b));
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(RationalProperty, ScalingInvariance) {
  testing::Sampler s(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t num = s.integer(-1000, 1000);
    std::int64_t den = s.integer(-1000, 1000);
    if (den == 0) den = 1;
    std::int64_t k = s.integer(-50, 50);
    if (k == 0) k = 7;
    EXPECT_EQ(Rational(num * k, den * k), Rational(num, den));
  }
}

TEST(RationalProperty, TextRoundTrip) {
  testing::Sampler s(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = s.rational(100000);
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

}  // namespace
}  // namespace soq
