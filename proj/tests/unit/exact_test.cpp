#include <gtest/gtest.h>

#include <cmath>

#include "spline_affine/exact.hpp"

using namespace spline_affine;

TEST(Rational, LowestTermsWithPositiveDenominator) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
}

TEST(Rational, ZeroDenominatorRejected) { EXPECT_THROW(make_rational(1, 0), Error); }

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
            Rational(Integer("41152263004115226300411522630")));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Rational, Pow2) {
  EXPECT_EQ(pow2(0), 1);
  EXPECT_EQ(pow2(10), 1024);
  EXPECT_EQ(pow2(-3), make_rational(1, 8));
  EXPECT_EQ(pow2(100) * pow2(-100), 1);
}

TEST(Decimal, IntegersAndTerminatingFractions) {
  EXPECT_EQ(to_decimal(Rational(0)), "0");
  EXPECT_EQ(to_decimal(Rational(2)), "2");
  EXPECT_EQ(to_decimal(Rational(-2)), "-2");
  EXPECT_EQ(to_decimal(make_rational(1, 4)), "0.25");
  EXPECT_EQ(to_decimal(make_rational(-3, 4)), "-0.75");
}

TEST(Decimal, ThirtySignificantDigits) {
  EXPECT_EQ(to_decimal(make_rational(1, 3)), "0.333333333333333333333333333333");
  EXPECT_EQ(to_decimal(make_rational(2, 3)), "0.666666666666666666666666666667");
  EXPECT_EQ(to_decimal(make_rational(400, 3)), "133.333333333333333333333333333");
}

TEST(Decimal, RoundHalfEven) {
  EXPECT_EQ(to_decimal(make_rational(1, 8), 2), "0.12");
  EXPECT_EQ(to_decimal(make_rational(3, 8), 2), "0.38");
  EXPECT_EQ(to_decimal(make_rational(5, 2), 1), "2");
  EXPECT_EQ(to_decimal(make_rational(7, 2), 1), "4");
  EXPECT_EQ(to_decimal(make_rational(-5, 2), 1), "-2");
}

TEST(Quadratic, Sqrt2Powers) {
  EXPECT_EQ(QuadraticNumber::sqrt2_power(0), QuadraticNumber(1));
  EXPECT_EQ(QuadraticNumber::sqrt2_power(1), QuadraticNumber(0, 1));
  EXPECT_EQ(QuadraticNumber::sqrt2_power(2), QuadraticNumber(2));
  EXPECT_EQ(QuadraticNumber::sqrt2_power(5), QuadraticNumber(0, 4));
  EXPECT_EQ(QuadraticNumber::sqrt2_power(-1), QuadraticNumber(0, make_rational(1, 2)));
  EXPECT_EQ(QuadraticNumber::sqrt2_power(-2), QuadraticNumber(make_rational(1, 2)));
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      EXPECT_EQ(QuadraticNumber::sqrt2_power(a) * QuadraticNumber::sqrt2_power(b),
                QuadraticNumber::sqrt2_power(a + b));
}

TEST(Quadratic, RingOperations) {
  const QuadraticNumber x(1, 1), y(1, -1);
  EXPECT_EQ(x * y, QuadraticNumber(-1));
  EXPECT_EQ(x + y, QuadraticNumber(2));
  EXPECT_EQ(x - y, QuadraticNumber(0, 2));
  EXPECT_EQ(-x, QuadraticNumber(-1, -1));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_TRUE((x * y).is_rational());
}

TEST(Quadratic, ExactSign) {
  EXPECT_EQ(QuadraticNumber(0).sign(), 0);
  EXPECT_EQ(QuadraticNumber(3, -2).sign(), 1);  // 9 > 8
  EXPECT_EQ(QuadraticNumber(-3, 2).sign(), -1);
  EXPECT_EQ(QuadraticNumber(1, -1).sign(), -1);
  EXPECT_EQ(QuadraticNumber(-1, 1).sign(), 1);
  // 99^2 = 9801 vs 2 * 70^2 = 9800
  EXPECT_EQ(QuadraticNumber(99, -70).sign(), 1);
  EXPECT_EQ(QuadraticNumber(-99, 70).sign(), -1);
}

TEST(Quadratic, ToDoubleRelativeError) {
  const double s2 = std::sqrt(2.0);
  for (long e = -20; e <= 20; ++e) {
    const double got = QuadraticNumber::sqrt2_power(e).to_double();
    // exact power of two times the correctly rounded sqrt2
    const double want = e % 2 == 0 ? std::ldexp(1.0, static_cast<int>(e / 2))
                                   : std::ldexp(s2, static_cast<int>((e - 1) / 2));
    EXPECT_LE(std::abs(got - want), 4 * 0x1p-53 * want) << e;
  }
  // catastrophic cancellation is avoided: 99 - 70 sqrt2 = 1/(99 + 70 sqrt2)
  const double tiny = QuadraticNumber(99, -70).to_double();
  const double want = 1.0 / (99.0 + 70.0 * s2);
  EXPECT_LE(std::abs(tiny - want), 0x1p-50 * want);
}

TEST(Quadratic, ToString) {
  EXPECT_EQ(QuadraticNumber(make_rational(1, 2), -3).to_string(), "1/2-3*sqrt2");
  EXPECT_EQ(QuadraticNumber(0).to_string(), "0+0*sqrt2");
}
