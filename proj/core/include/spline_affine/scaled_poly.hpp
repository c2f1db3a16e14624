#pragma once

#include <cstdint>

#include "spline_affine/dyadic_poly.hpp"

namespace spline_affine {

/// The function 2^{sqrt2_exponent/2} * poly. Keeps the irrational
/// normalisation of dilated copies out of the rational piece data.
struct ScaledPoly {
  PiecewisePoly poly;
  unsigned sqrt2_exponent = 0;

  friend bool operator==(const ScaledPoly& f, const ScaledPoly& g);
};

/// (f, g) = 2^{(k_f + k_g)/2} (poly_f, poly_g), exact in Q[sqrt 2].
QuadraticNumber inner_product(const ScaledPoly& f, const ScaledPoly& g);
/// ||f||^2 = 2^{k_f} ||poly_f||^2 is always rational.
Rational squared_norm(const ScaledPoly& f);

/// n-th element of the system of dilations and translations of f restricted
/// to [0,1): n = 0 gives the constant 1, otherwise with n = 2^k + j,
/// 2^{k/2} f(2^k t - j) on [j/2^k, (j+1)/2^k) and zero elsewhere.
ScaledPoly affine_element(const PiecewisePoly& f, std::uint64_t n);

}  // namespace spline_affine
