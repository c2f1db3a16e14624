#include "spline_affine/chaos_spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "spline_affine/affine_operators.hpp"
#include "spline_affine/parallel.hpp"

namespace spline_affine {

Rational walsh_coeff(const PiecewisePoly& f, std::uint64_t paley_n) {
  if (paley_n == 0) throw Error("w_0 excluded");
  return inner_product(f, walsh_fn(paley_n));
}

std::vector<Rational> walsh_spectrum(const PiecewisePoly& f, std::uint64_t max_index) {
  if (max_index == 0) return {mean(f)};
  const unsigned level = scale_of(max_index) + 1;
  if (level > kMaxLevel) throw Error("max_index too large");
  const std::size_t cells = std::size_t{1} << level;

  // Antiderivative values at the cell breakpoints; the value at t = 1 is the
  // left limit of the last piece.
  const PiecewisePoly anti = volterra(f);
  std::vector<Rational> at(cells + 1);
  for (std::size_t i = 0; i < cells; ++i)
    at[i] = eval(anti, make_rational(Integer(static_cast<unsigned long>(i)), Integer(1) << level));
  at[cells] = anti.piece(anti.piece_count() - 1)(Rational(1));

  // w_n on cell i is (-1)^{popcount(n & reverse(i))}: r_v reads binary digit
  // v+1 of t, which is bit level-1-v of the cell index.
  std::vector<Rational> h(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    std::size_t rev = 0;
    for (unsigned b = 0; b < level; ++b) rev |= ((i >> b) & 1U) << (level - 1 - b);
    h[rev] = at[i + 1] - at[i];
  }
  for (std::size_t len = 1; len < cells; len <<= 1) {
    for (std::size_t base = 0; base < cells; base += 2 * len) {
      for (std::size_t i = base; i < base + len; ++i) {
        Rational x = h[i];
        h[i] += h[i + len];
        h[i + len] = x - h[i + len];
      }
    }
  }
  h.resize(max_index + 1);
  return h;
}

Rational ChaosDecomposition::partial_sq_norm(unsigned order) const {
  auto it = partial_sq_norms.find(order);
  return it == partial_sq_norms.end() ? Rational(0) : it->second;
}

std::set<MultiIndex> ChaosDecomposition::spectrum_of_order(unsigned order) const {
  std::set<MultiIndex> out;
  auto it = by_order.find(order);
  if (it == by_order.end()) return out;
  for (const auto& [n, c] : it->second) out.insert(paley_multiindex(n));
  return out;
}

ChaosDecomposition decompose(const PiecewisePoly& f, std::uint64_t max_index, unsigned m) {
  if (max_index < 7) throw Error("max_index must be at least 7");
  ChaosDecomposition d;
  d.m = m;
  d.max_index = max_index;
  d.coeffs = walsh_spectrum(f, max_index);
  d.norm_sq = squared_norm(f);
  d.residual = d.norm_sq;
  for (std::uint64_t n = 1; n <= max_index; ++n) {
    const Rational& c = d.coeffs[n];
    if (sgn(c) == 0) continue;
    const unsigned order = chaos_order(n);
    d.by_order[order].emplace_back(n, c);
    Rational sq = c * c;
    d.partial_sq_norms[order] += sq;
    d.residual -= sq;
  }
  return d;
}

ChaosDecomposition decompose(unsigned m, std::uint64_t max_index) {
  return decompose(build_spline(m).poly, max_index, m);
}

Rational gamma(unsigned m) {
  if (m == 0) throw Error("gamma defined for m >= 1");
  return make_rational(2, 9) * (1 - pow2(-2 * (static_cast<long>(m) - 1)));
}

std::vector<std::uint64_t> lemma3_mismatches(const ChaosDecomposition& d) {
  if (d.m == 0) throw Error("decomposition is not tagged with a spline order");
  const Rational at_seven = -(gamma(d.m) + make_rational(1, 2));
  std::vector<std::uint64_t> bad;
  for (std::uint64_t n = 1; n <= d.max_index; ++n) {
    if (chaos_order(n) != 3) continue;
    Rational expected = 0;
    if (n == 7) {
      expected = at_seven;
    } else if (n > 7 && (n - 3) == std::bit_floor(n - 3) && (n - 3) >= 8) {
      // n = 3 + 2^{k+2}, k >= 1
      const long k = static_cast<long>(std::bit_width(n - 3)) - 3;
      expected = -pow2(-(k + 1));
    }
    if (d.coeffs[n] != expected) bad.push_back(n);
  }
  return bad;
}

bool verify_lemma3(unsigned m, std::uint64_t max_index) {
  return lemma3_mismatches(decompose(m, max_index)).empty();
}

bool is_simple_spectrum(const std::set<MultiIndex>& spectrum) {
  for (const auto& beta : spectrum) {
    // Every proper suffix of beta (including the empty word).
    const auto& bits = beta.bits();
    for (std::size_t drop = 1; drop <= bits.size(); ++drop) {
      MultiIndex suffix(std::vector<std::uint8_t>(bits.begin() + static_cast<std::ptrdiff_t>(drop), bits.end()));
      if (spectrum.contains(suffix)) return false;
    }
  }
  return true;
}

bool has_modulated_chaos_pattern(const std::set<MultiIndex>& spectrum) {
  if (spectrum.empty()) return true;
  const std::size_t ones = spectrum.begin()->ones();
  return std::all_of(spectrum.begin(), spectrum.end(), [&](const MultiIndex& b) {
    return !b.empty() && b[0] == 1 && b.ones() == ones;
  });
}

OrthogonalityReport orthogonality_report(const PiecewisePoly& f, unsigned depth) {
  if (f.is_zero()) throw Error("orthogonality report needs a nonzero generator");
  if (sgn(mean(f)) != 0) throw Error("orthogonality report needs a zero-mean generator");
  if (depth > 8) throw Error("orthogonality depth too large");

  std::vector<MultiIndex> words;
  for (unsigned k = 0; k <= depth; ++k) {
    auto level = MultiIndex::all_of_length(k);
    words.insert(words.end(), level.begin(), level.end());
  }
  const std::size_t count = words.size();

  std::vector<PiecewisePoly> walsh(count);
  std::vector<ScaledPoly> haar(count);
  parallel_for(count, [&](std::size_t i) {
    walsh[i] = w_alpha(f, words[i]);
    haar[i] = s_alpha(f, words[i]);
  });

  OrthogonalityReport rep;
  rep.depth = depth;
  rep.system_size = count;
  rep.norm_sq = squared_norm(f);

  std::vector<Rational> walsh_gram(count * count);
  std::vector<QuadraticNumber> haar_gram(count * count);
  parallel_for(count, [&](std::size_t i) {
    for (std::size_t j = i; j < count; ++j) {
      walsh_gram[i * count + j] = inner_product(walsh[i], walsh[j]);
      haar_gram[i * count + j] = inner_product(haar[i], haar[j]);
    }
  });

  rep.walsh_max_offdiag = 0;
  rep.walsh_offdiag_zero = rep.haar_offdiag_zero = true;
  rep.walsh_diag_equal_norm = rep.haar_diag_equal_norm = true;
  const QuadraticNumber norm_q(rep.norm_sq);
  for (std::size_t i = 0; i < count; ++i) {
    if (walsh_gram[i * count + i] != rep.norm_sq) rep.walsh_diag_equal_norm = false;
    if (!(haar_gram[i * count + i] == norm_q)) rep.haar_diag_equal_norm = false;
    for (std::size_t j = i + 1; j < count; ++j) {
      const Rational w = abs(walsh_gram[i * count + j]);
      if (sgn(w) != 0) rep.walsh_offdiag_zero = false;
      if (w > rep.walsh_max_offdiag) rep.walsh_max_offdiag = w;
      const QuadraticNumber& h = haar_gram[i * count + j];
      if (!h.is_zero()) rep.haar_offdiag_zero = false;
      rep.haar_max_offdiag = std::max(rep.haar_max_offdiag, std::abs(h.to_double()));
    }
  }
  return rep;
}

PiecewisePoly truncated_w1_squared_lambda(std::uint64_t max_index) {
  std::vector<std::pair<Rational, PiecewisePoly>> terms;
  for (long k = 0; k < 60; ++k) {
    const std::uint64_t n = 3 + (std::uint64_t{1} << (k + 2));
    if (n > max_index) break;
    terms.emplace_back(pow2(-(k + 1)), walsh_fn(n));
  }
  return linear_combine(terms);
}

}  // namespace spline_affine
