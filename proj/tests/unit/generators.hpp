#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "spline_affine/dyadic_poly.hpp"
#include "spline_affine/walsh_index.hpp"

namespace spline_affine::testing {

// Seeded so that failures replay.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // numerator in [-100, 100], denominator in [1, 100]
  Rational rational() { return make_rational(integer(-100, 100), integer(1, 100)); }

  Polynomial polynomial(unsigned max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
    for (auto& x : c) x = rational();
    return Polynomial(std::move(c));
  }

  PiecewisePoly piecewise(unsigned max_level = 4, unsigned max_degree = 3) {
    const auto level = static_cast<unsigned>(integer(0, max_level));
    std::vector<Polynomial> pieces(std::size_t{1} << level);
    for (auto& p : pieces) p = polynomial(max_degree);
    return PiecewisePoly(level, std::move(pieces));
  }

  PiecewisePoly zero_mean_piecewise(unsigned max_level = 4, unsigned max_degree = 3) {
    PiecewisePoly p = piecewise(max_level, max_degree);
    return p - PiecewisePoly::constant(mean(p));
  }

  MultiIndex multi_index(unsigned max_length) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(integer(0, max_length)));
    for (auto& b : bits) b = static_cast<std::uint8_t>(integer(0, 1));
    return MultiIndex(std::move(bits));
  }

 private:
  std::mt19937_64 rng_;
};

// Exact integral of a polynomial over [lo, hi] through its antiderivative
// written out term by term.
inline Rational integrate_oracle(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Rational s = 0;
  const auto& c = p.coeffs();
  for (std::size_t d = 0; d < c.size(); ++d) {
    Rational hp = 1, lp = 1;
    for (std::size_t e = 0; e <= d; ++e) {
      hp *= hi;
      lp *= lo;
    }
    s += c[d] * (hp - lp) / static_cast<long>(d + 1);
  }
  return s;
}

// Exact L2 inner product by splitting [0,1) at the finer of the two levels
// and evaluating each product piece independently.
inline Rational inner_product_oracle(const PiecewisePoly& p, const PiecewisePoly& q) {
  const unsigned level = std::max(p.level(), q.level());
  const Integer cells = Integer(1) << level;
  Rational s = 0;
  for (unsigned long i = 0; cells > i; ++i) {
    const Rational lo = make_rational(Integer(i), cells), hi = make_rational(Integer(i + 1), cells);
    const Polynomial& a = p.piece(static_cast<std::size_t>(i >> (level - p.level())));
    const Polynomial& b = q.piece(static_cast<std::size_t>(i >> (level - q.level())));
    s += integrate_oracle(a * b, lo, hi);
  }
  return s;
}

}  // namespace spline_affine::testing
