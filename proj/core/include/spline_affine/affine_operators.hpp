#pragma once

#include <cstdint>
#include <vector>

#include "spline_affine/dyadic_poly.hpp"
#include "spline_affine/scaled_poly.hpp"
#include "spline_affine/walsh_index.hpp"

namespace spline_affine {

/// W0 f(t) = f(2t).
PiecewisePoly w0(const PiecewisePoly& f);
/// W1 f(t) = r(t) f(2t); the result is 1/2-antiperiodic.
PiecewisePoly w1(const PiecewisePoly& f);
/// W_bit for bit in {0, 1}.
PiecewisePoly w_op(int bit, const PiecewisePoly& f);

/// U f = 4 W1 V f. Throws unless mean(f) == 0.
PiecewisePoly u_op(const PiecewisePoly& f);

/// W^a f = W_{a_0} ... W_{a_{k-1}} f, so W_{a_{k-1}} acts first and
/// W^a r is the Paley-indexed Walsh function w_{paley_index(a)}.
PiecewisePoly w_alpha(const PiecewisePoly& f, const MultiIndex& alpha);

/// S^a f, realised as affine_element(f, natural_index(a)); the sqrt 2
/// factors of (W0 +- W1)/sqrt 2 are carried by the exponent.
ScaledPoly s_alpha(const PiecewisePoly& f, const MultiIndex& alpha);

/// Elements n = 0, ..., count-1 of the dilation/translation system of f.
std::vector<ScaledPoly> affine_system(const PiecewisePoly& f, std::size_t count);

/// 2^{m(m+5)/2}.
Rational spline_kappa(unsigned m);

/// prod_{k=0}^{m} r_k on the level m+1 partition.
PiecewisePoly rademacher_product(unsigned m);

/// The order-m spline generator with its normalising constant.
struct SplineSpec {
  unsigned m = 0;
  Rational kappa;
  PiecewisePoly poly;
};

/// psi_m = U^m r. Throws for m == 0 (that generator is the Haar function)
/// and if the result fails its defining derivative identity or initial
/// conditions.
SplineSpec build_spline(unsigned m);

/// m-th derivative equals kappa * prod_{k<=m} r_k on every open piece.
bool satisfies_derivative_identity(const SplineSpec& spec);
/// Derivatives of order 0..m-1 vanish at t = 0.
bool satisfies_initial_conditions(const SplineSpec& spec);

/// f(t + 1/2) == -f(t) as an identity of piece polynomials.
bool is_antiperiodic(const PiecewisePoly& f);

/// Largest c such that derivatives of order 0..c agree from both sides at
/// every breakpoint, including the periodic wrap 1 ~ 0; -1 if f itself
/// jumps. Capped at degree().
int smoothness_order(const PiecewisePoly& f);

/// rho_m = (4 V W1)^m 1.
PiecewisePoly build_rho(unsigned m);

/// rho(2^{k+1} t) w_n(t) with 2^k <= n < 2^{k+1} (Paley n).
PiecewisePoly granados_element(const PiecewisePoly& rho, unsigned k, std::uint64_t n);
PiecewisePoly granados_element(unsigned m, unsigned k, std::uint64_t n);

}  // namespace spline_affine
