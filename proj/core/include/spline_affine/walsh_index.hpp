#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "spline_affine/dyadic_poly.hpp"
#include "spline_affine/scaled_poly.hpp"

namespace spline_affine {

/// Binary word (a_0, ..., a_{k-1}); the empty word is allowed.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> bits);
  explicit MultiIndex(std::vector<std::uint8_t> bits);
  /// Parses a string of '0'/'1' characters; "" is the empty word.
  static MultiIndex parse(std::string_view bits);
  /// All words of length k in lexicographic order of (a_0, ..., a_{k-1}).
  static std::vector<MultiIndex> all_of_length(unsigned k);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t ones() const;

  /// "101" for (1,0,1); "" for the empty word.
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

/// True iff longer == concat(prefix, shorter) for some nonempty prefix.
bool is_proper_suffix(const MultiIndex& shorter, const MultiIndex& longer);

/// Paley enumeration n = sum a_v 2^v + 2^k (Walsh functions, W^a r = w_n).
std::uint64_t paley_index(const MultiIndex& a);
MultiIndex paley_multiindex(std::uint64_t n);

/// Natural enumeration n = sum a_{k-v} 2^{v-1} + 2^k (Haar functions,
/// S^a r = chi_n): a_0 is the most significant bit of j in n = 2^k + j.
std::uint64_t natural_index(const MultiIndex& a);
MultiIndex natural_multiindex(std::uint64_t n);

/// floor(log2 n) for n >= 1, i.e. the k in n = 2^k + j.
unsigned scale_of(std::uint64_t n);

/// Number of Rademacher factors of the Paley-indexed Walsh function w_n.
unsigned chaos_order(std::uint64_t paley_n);

/// r_k(t) = r(2^k t) at the given partition level (level >= k + 1).
PiecewisePoly rademacher(unsigned k, unsigned level);
PiecewisePoly rademacher(unsigned k);

/// Paley-indexed Walsh function w_n, n >= 1, at level >= k + 1.
PiecewisePoly walsh_fn(std::uint64_t paley_n, unsigned level);
PiecewisePoly walsh_fn(std::uint64_t paley_n);

/// Haar generator chi = r on [0,1).
PiecewisePoly haar_generator();
/// Naturally indexed Haar function chi_n, n >= 1.
ScaledPoly haar_fn(std::uint64_t natural_n);

/// Sign matrix of one scale block: scaled entry (i, j) is
/// (w_{2^k+i}, chi_{2^k+j}) = signs(i, j) * 2^{-k/2}, rows by Paley offset i,
/// columns by natural offset j.
class WalshMatrixLevel {
 public:
  WalshMatrixLevel(unsigned k, std::vector<int> signs);

  unsigned k() const { return k_; }
  std::size_t dim() const { return std::size_t{1} << k_; }
  int sign(std::size_t i, std::size_t j) const { return signs_[i * dim() + j]; }
  /// epsilon_{alpha beta}: coefficient of W^beta r in 2^{k/2} S^alpha r.
  int epsilon(const MultiIndex& alpha, const MultiIndex& beta) const;
  /// Checks signs^T signs == 2^k I in integer arithmetic.
  bool is_unitary() const;

 private:
  unsigned k_;
  std::vector<int> signs_;
};

/// Built from exact inner products between the level-k Haar and Walsh
/// blocks, not from an assumed Hadamard layout.
WalshMatrixLevel walsh_matrix(unsigned k);

}  // namespace spline_affine
