#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spline_affine/exact.hpp"

namespace spline_affine {

/// Polynomial with exact rational coefficients; coeffs()[d] multiplies t^d.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and equality is coefficient-wise.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// The affine polynomial slope * t + offset.
  static Polynomial affine(const Rational& slope, const Rational& offset);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with the zero polynomial reported as degree 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  Rational operator()(const Rational& t) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  /// p(slope * t + offset).
  Polynomial compose_affine(const Rational& slope, const Rational& offset) const;
  /// Exact integral over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Largest supported partition level; keeps piece counts addressable and
/// memory bounded.
inline constexpr unsigned kMaxLevel = 24;

/// A 1-periodic piecewise polynomial on the dyadic partition of [0,1) at
/// `level`: piece i covers [i/2^level, (i+1)/2^level) and holds a polynomial
/// in the global variable t. Values at breakpoints are right limits.
///
/// Storage keeps only the window of pieces between the first and last nonzero
/// piece; everything outside is zero. Dilated and translated copies of a
/// generator therefore cost as much as the generator itself.
class PiecewisePoly {
 public:
  /// The zero function at level 0.
  PiecewisePoly() = default;
  /// Dense construction; pieces.size() must equal 2^level.
  PiecewisePoly(unsigned level, std::vector<Polynomial> pieces);
  /// Pieces [first, first + pieces.size()) given, the rest zero.
  static PiecewisePoly windowed(unsigned level, std::size_t first, std::vector<Polynomial> pieces);
  static PiecewisePoly zero(unsigned level = 0);
  static PiecewisePoly constant(const Rational& c);

  unsigned level() const { return level_; }
  /// Maximum degree over the pieces (0 for piecewise constants and zero).
  std::size_t degree() const;
  std::size_t piece_count() const { return std::size_t{1} << level_; }
  bool is_zero() const { return pieces_.empty(); }

  /// Half-open range of piece indices outside of which the function is zero.
  std::size_t window_begin() const { return first_; }
  std::size_t window_end() const { return first_ + pieces_.size(); }

  const Polynomial& piece(std::size_t i) const;
  /// Polynomial on piece i of the partition at `fine_level` >= level().
  const Polynomial& piece_at(unsigned fine_level, std::size_t i) const {
    return piece(i >> (fine_level - level_));
  }

  /// Same function, same level; pieces listed densely.
  std::vector<Polynomial> dense_pieces() const;

  /// Function equality (levels may differ).
  friend bool operator==(const PiecewisePoly& p, const PiecewisePoly& q);

 private:
  unsigned level_ = 0;
  std::size_t first_ = 0;
  std::vector<Polynomial> pieces_;
};

/// Value at t reduced mod 1, right-continuous at breakpoints.
Rational eval(const PiecewisePoly& p, const Rational& t);

PiecewisePoly linear_combine(std::span<const std::pair<Rational, PiecewisePoly>> terms);
PiecewisePoly operator+(const PiecewisePoly& p, const PiecewisePoly& q);
PiecewisePoly operator-(const PiecewisePoly& p, const PiecewisePoly& q);
PiecewisePoly operator*(const Rational& c, const PiecewisePoly& p);
/// Pointwise product.
PiecewisePoly operator*(const PiecewisePoly& p, const PiecewisePoly& q);

/// Antiderivative on [0,1] vanishing at 0, continuous across breakpoints.
/// Periodic only when mean(p) == 0.
PiecewisePoly volterra(const PiecewisePoly& p);
/// Piecewise derivative on the open pieces.
PiecewisePoly derivative(const PiecewisePoly& p);

/// Exact integral of p*q over [0,1].
Rational inner_product(const PiecewisePoly& p, const PiecewisePoly& q);
Rational squared_norm(const PiecewisePoly& p);
/// Exact integral over [0,1].
Rational mean(const PiecewisePoly& p);

/// Same function on the finer partition; throws when new_level < level.
PiecewisePoly refine(const PiecewisePoly& p, unsigned new_level);

}  // namespace spline_affine
