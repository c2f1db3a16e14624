#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "spline_affine/dyadic_poly.hpp"
#include "spline_affine/walsh_index.hpp"

namespace spline_affine {

/// (f, w_n) for the Paley-indexed Walsh function w_n, by exact integration.
Rational walsh_coeff(const PiecewisePoly& f, std::uint64_t paley_n);

/// All coefficients (f, w_n) for 0 <= n <= max_index (entry 0 is the mean).
/// Integrates f exactly over the dyadic cells on which every requested w_n is
/// constant, then applies an exact Walsh-Hadamard butterfly in rationals.
std::vector<Rational> walsh_spectrum(const PiecewisePoly& f, std::uint64_t max_index);

/// Walsh coefficients of psi_m up to a Paley index, grouped by Rademacher
/// chaos order. The order-(2s+1) group is -f_{m,s}.
struct ChaosDecomposition {
  unsigned m = 0;
  std::uint64_t max_index = 0;
  /// coeffs[n] = (psi_m, w_n), n = 0..max_index.
  std::vector<Rational> coeffs;
  /// Nonzero coefficients keyed by chaos order, each list ascending in n.
  std::map<unsigned, std::vector<std::pair<std::uint64_t, Rational>>> by_order;
  std::map<unsigned, Rational> partial_sq_norms;
  Rational norm_sq;
  /// norm_sq - sum_{1 <= n <= max_index} coeffs[n]^2.
  Rational residual;

  Rational partial_sq_norm(unsigned order) const;
  /// Walsh spectrum of the order slice, as Paley multi-indices.
  std::set<MultiIndex> spectrum_of_order(unsigned order) const;
};

ChaosDecomposition decompose(const PiecewisePoly& f, std::uint64_t max_index, unsigned m = 0);
ChaosDecomposition decompose(unsigned m, std::uint64_t max_index);

/// Closed form 2/9 (1 - 4^{-(m-1)}), m >= 1.
Rational gamma(unsigned m);

/// Paley indices of order 3 whose coefficient in psi_m differs from the
/// closed form: -(gamma_m + 1/2) at n = 7, -2^{-(k+1)} at n = 3 + 2^{k+2}
/// for k >= 1, zero elsewhere.
std::vector<std::uint64_t> lemma3_mismatches(const ChaosDecomposition& d);
bool verify_lemma3(unsigned m, std::uint64_t max_index = 4096);

/// Definition of a simple spectrum on a finite set: no element is a proper
/// suffix of another.
bool is_simple_spectrum(const std::set<MultiIndex>& spectrum);

/// Every word starts with 1 and all words carry the same number of ones,
/// the shape (1, 0_{k1}, ..., 1, 0_{kd}) of an antiperiodised chaos slice.
/// Such sets are always simple.
bool has_modulated_chaos_pattern(const std::set<MultiIndex>& spectrum);

struct OrthogonalityReport {
  unsigned depth = 0;
  std::size_t system_size = 0;  ///< words with |alpha| <= depth
  Rational norm_sq;
  /// max |(W^a f, W^a' f)| over a != a'.
  Rational walsh_max_offdiag;
  bool walsh_offdiag_zero = false;
  bool walsh_diag_equal_norm = false;
  /// max |(S^a f, S^a' f)| over a != a' (rounded from Q[sqrt 2]).
  double haar_max_offdiag = 0.0;
  bool haar_offdiag_zero = false;
  bool haar_diag_equal_norm = false;

  bool orthogonal() const {
    return walsh_offdiag_zero && walsh_diag_equal_norm && haar_offdiag_zero && haar_diag_equal_norm;
  }
};

/// Pairwise inner products of the affine Walsh and Haar systems generated
/// by f for all words of length <= depth. Throws if f is zero or has
/// nonzero mean.
OrthogonalityReport orthogonality_report(const PiecewisePoly& f, unsigned depth);

/// sum_k 2^{-(k+1)} W1^2 r_k over the terms whose Paley index is at most
/// max_index, i.e. W1^2 lambda truncated in its Walsh expansion.
PiecewisePoly truncated_w1_squared_lambda(std::uint64_t max_index);

}  // namespace spline_affine
