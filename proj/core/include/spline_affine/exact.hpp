#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace spline_affine {

/// Error raised by every module when a precondition is violated or a
/// computation cannot complete. The message is user facing.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; use make_rational() when building from a
/// numerator/denominator pair.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" (decimal integers).
Rational parse_rational(std::string_view text);

/// 2^e for any integer e, exactly.
Rational pow2(long e);

/// Decimal rendering rounded half-to-even at `digits` significant digits,
/// in plain fixed notation with trailing zeros removed ("2", "-0.25",
/// "0.333...3").
std::string to_decimal(const Rational& value, int digits = 30);

/// Element a + b*sqrt(2) of the quadratic field Q[sqrt 2].
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  /// 2^{e/2} for integer e >= 0 (or negative), exactly.
  static QuadraticNumber sqrt2_power(long e);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber operator-() const { return {-a_, -b_}; }

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Sign of a + b*sqrt(2), decided exactly.
  int sign() const;

  /// Conversion through 256-bit binary floating point, so the relative
  /// error of the returned double is within one double rounding (2^-53).
  double to_double() const;

  /// "a+b*sqrt2" with a and b as exact p/q strings.
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

}  // namespace spline_affine
