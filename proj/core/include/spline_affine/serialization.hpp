#pragma once

#include <nlohmann/json.hpp>

#include "spline_affine/affine_operators.hpp"
#include "spline_affine/dyadic_poly.hpp"
#include "spline_affine/exact.hpp"

namespace spline_affine {

/// ["numerator", "denominator"] with exact decimal integer strings.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

/// {"level": j, "degree": d, "pieces": [[[num, den], ...], ...]} with all
/// 2^level pieces listed and degree + 1 coefficients per piece.
nlohmann::json to_json(const PiecewisePoly& p);
PiecewisePoly piecewise_from_json(const nlohmann::json& j);

/// {"m": m, "kappa": [num, den], "poly": {...}}
nlohmann::json to_json(const SplineSpec& spec);
SplineSpec spline_from_json(const nlohmann::json& j);

}  // namespace spline_affine
