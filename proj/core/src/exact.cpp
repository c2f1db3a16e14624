#include "spline_affine/exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace spline_affine {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    return make_rational(Integer(std::string(text.substr(0, slash))),
                         Integer(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(e)));
  if (e >= 0) return Rational(p);
  return make_rational(Integer(1), p);
}

namespace {

// Integer division rounded half-to-even; den > 0.
Integer div_round_half_even(const Integer& num, const Integer& den) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice = 2 * r;
  int c = cmp(twice, den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

Integer pow10(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return p;
}

}  // namespace

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 1) throw Error("digits must be positive");
  if (sgn(value) == 0) return "0";

  Integer num = abs(value.get_num());
  const Integer& den = value.get_den();

  // Decimal exponent e with 10^e <= |value| < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto at_least = [&](long p) {  // |value| >= 10^p
    return p >= 0 ? cmp(num, den * pow10(p)) >= 0 : cmp(num * pow10(-p), den) >= 0;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;

  // Scale so the integer part carries exactly `digits` digits.
  long shift = digits - 1 - e;
  Integer scaled = shift >= 0 ? div_round_half_even(num * pow10(shift), den)
                              : div_round_half_even(num, den * pow10(-shift));
  if (scaled == pow10(digits)) {  // rounding carried into a new digit
    scaled /= 10;
    --shift;
  }

  std::string body = scaled.get_str();
  std::string out;
  if (shift <= 0) {
    out = body + std::string(static_cast<std::size_t>(-shift), '0');
  } else {
    auto frac_len = static_cast<std::size_t>(shift);
    if (body.size() <= frac_len) body.insert(0, frac_len - body.size() + 1, '0');
    out = body.substr(0, body.size() - frac_len) + "." + body.substr(body.size() - frac_len);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sgn(value) < 0 ? "-" + out : out;
}

QuadraticNumber QuadraticNumber::sqrt2_power(long e) {
  long half = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e / 2)
  if (e - 2 * half == 0) return {pow2(half), 0};
  return {0, pow2(half)};
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

int QuadraticNumber::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  int c = cmp(Rational(a_ * a_), Rational(2 * b_ * b_));
  return c > 0 ? sa : sb;
}

double QuadraticNumber::to_double() const {
  constexpr mp_bitcnt_t kBits = 256;
  mpf_class a(a_, kBits), b(b_, kBits), root(2, kBits);
  root = sqrt(root);
  mpf_class sum(0, kBits);
  sum = a + b * root;
  return sum.get_d();
}

std::string QuadraticNumber::to_string() const {
  return a_.get_str() + (sgn(b_) < 0 ? "" : "+") + b_.get_str() + "*sqrt2";
}

}  // namespace spline_affine
