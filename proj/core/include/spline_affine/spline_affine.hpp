#pragma once

#include "spline_affine/affine_operators.hpp"
#include "spline_affine/chaos_spectrum.hpp"
#include "spline_affine/dyadic_poly.hpp"
#include "spline_affine/exact.hpp"
#include "spline_affine/riesz_analysis.hpp"
#include "spline_affine/scaled_poly.hpp"
#include "spline_affine/serialization.hpp"
#include "spline_affine/symmetric_eigen.hpp"
#include "spline_affine/walsh_index.hpp"
