#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spline_affine/exact.hpp"
#include "spline_affine/scaled_poly.hpp"
#include "spline_affine/symmetric_eigen.hpp"

namespace spline_affine {

/// Exact Gram matrix over Q[sqrt 2] of a finite function system.
class GramMatrix {
 public:
  GramMatrix(std::vector<std::uint64_t> indices, std::vector<QuadraticNumber> entries);

  std::size_t size() const { return indices_.size(); }
  /// System index of row i (0..N-1 for affine systems).
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  const QuadraticNumber& operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

  bool is_symmetric() const;
  SymmetricMatrix to_double() const;

 private:
  std::vector<std::uint64_t> indices_;
  std::vector<QuadraticNumber> entries_;
};

/// Pairwise exact inner products; pairs with disjoint dyadic supports cost
/// no integration. indices defaults to 0..N-1.
GramMatrix gram(const std::vector<ScaledPoly>& system, std::vector<std::uint64_t> indices = {});

/// Gram of the affine system f_n, n = first..first+count-1 (first is 0 or
/// 1), built from dilation invariance: for nested supports
/// (f_n, f_n') = (f, f_p) with p the position of n' relative to n, so only
/// one row of integrals is needed. Agrees exactly with gram(affine_system).
GramMatrix affine_gram(const PiecewisePoly& f, std::uint64_t first, std::uint64_t count);

struct ExtremeEigenvalues {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double residual = 0.0;
};

ExtremeEigenvalues extreme_eigenvalues(const GramMatrix& g, double tol = 1e-12);

/// Bounds the Riesz certificate checks section spectra against: [A^2, B^2]
/// with A = 1/10, B = 19/10.
inline constexpr double kLowerSpectralBound = 0.01;
inline constexpr double kUpperSpectralBound = 3.61;
inline constexpr double kDeviationBound = 0.9;
inline constexpr double kTailNormBound = 0.12;

/// Generator of order m: the Haar function for m == 0, psi_m otherwise.
PiecewisePoly affine_generator(unsigned m);

/// The m-spline affine system psi_{m,n}, n = 0..2^depth - 1.
std::vector<ScaledPoly> spline_affine_system(unsigned m, unsigned depth);

struct NormSumCertificate {
  unsigned m = 0;
  std::uint64_t max_index = 0;
  /// Interval for ||f_{m,s}|| per s = 1..m (index s-1); the upper end
  /// charges the whole residual to order 2s+1.
  std::vector<std::pair<double, double>> component_bounds;
  /// Sum over s = 1..m; the upper end distributes the residual once.
  std::pair<double, double> total;
  std::pair<double, double> tail;  ///< same, over s = 2..m
  /// Truncated order-3 mass plus the exact tail of the closed form beyond
  /// max_index; equals closed_form when the order-3 slice matches it.
  Rational first_component_sq;
  /// (gamma_m + 1/2)^2 + 1/12.
  Rational first_component_sq_closed_form;
  bool first_component_matches = false;
  bool first_component_below_7_9 = false;
};

NormSumCertificate norm_sum_certificate(unsigned m, std::uint64_t max_index = 4096);

struct CertificateCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BoundsCertificate {
  unsigned m = 0;
  unsigned depth = 0;
  std::uint64_t max_index = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double A_est = 0.0;
  double B_est = 0.0;
  double eig_residual = 0.0;
  std::pair<double, double> norm_sum_interval{0.0, 0.0};
  double deviation_lambda_max = 0.0;
  double deviation_norm = 0.0;
  std::vector<CertificateCheck> checks;

  bool pass() const;
};

/// Extreme eigenvalues of the Gram section of the order-m system of size
/// 2^depth; m == 0 gives the Haar system.
BoundsCertificate riesz_bounds_estimate(unsigned m, unsigned depth, double tol = 1e-12);

/// sqrt of the largest eigenvalue of the Gram of chi_n - psi_{m,n},
/// 1 <= n < 2^depth.
double deviation_norm(unsigned m, unsigned depth, double tol = 1e-12);

/// All certificates for one spline order, with pass/fail per check.
BoundsCertificate full_report(unsigned m, unsigned depth = 6, std::uint64_t max_index = 4096,
                              double tol = 1e-12);

}  // namespace spline_affine
