#include "spline_affine/walsh_index.hpp"

#include <bit>

namespace spline_affine {

namespace {

constexpr unsigned kMaxWordLength = 62;

void check_length(std::size_t k) {
  if (k > kMaxWordLength) throw Error("multi-index longer than " + std::to_string(kMaxWordLength));
}

std::uint64_t offset_in_scale(std::uint64_t n) { return n - (std::uint64_t{1} << scale_of(n)); }

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) throw Error("multi-index entries must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

MultiIndex::MultiIndex(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw Error("multi-index entries must be 0 or 1");
}

MultiIndex MultiIndex::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error("multi-index string must contain only 0 and 1");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return MultiIndex(std::move(bits));
}

std::vector<MultiIndex> MultiIndex::all_of_length(unsigned k) {
  check_length(k);
  std::vector<MultiIndex> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    std::vector<std::uint8_t> bits(k);
    for (unsigned i = 0; i < k; ++i) bits[i] = static_cast<std::uint8_t>((code >> (k - 1 - i)) & 1U);
    out.emplace_back(std::move(bits));
  }
  return out;
}

std::size_t MultiIndex::ones() const {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

std::string MultiIndex::to_string() const {
  std::string s;
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  std::vector<std::uint8_t> bits = a.bits();
  bits.insert(bits.end(), b.bits().begin(), b.bits().end());
  return MultiIndex(std::move(bits));
}

bool is_proper_suffix(const MultiIndex& shorter, const MultiIndex& longer) {
  if (shorter.size() >= longer.size()) return false;
  std::size_t shift = longer.size() - shorter.size();
  for (std::size_t i = 0; i < shorter.size(); ++i)
    if (shorter[i] != longer[shift + i]) return false;
  return true;
}

std::uint64_t paley_index(const MultiIndex& a) {
  check_length(a.size());
  std::uint64_t n = std::uint64_t{1} << a.size();
  for (std::size_t v = 0; v < a.size(); ++v) n |= static_cast<std::uint64_t>(a[v]) << v;
  return n;
}

MultiIndex paley_multiindex(std::uint64_t n) {
  if (n == 0) throw Error("w_0 excluded");
  unsigned k = scale_of(n);
  std::vector<std::uint8_t> bits(k);
  for (unsigned v = 0; v < k; ++v) bits[v] = static_cast<std::uint8_t>((n >> v) & 1U);
  return MultiIndex(std::move(bits));
}

std::uint64_t natural_index(const MultiIndex& a) {
  check_length(a.size());
  const std::size_t k = a.size();
  std::uint64_t n = std::uint64_t{1} << k;
  for (std::size_t i = 0; i < k; ++i) n |= static_cast<std::uint64_t>(a[i]) << (k - 1 - i);
  return n;
}

MultiIndex natural_multiindex(std::uint64_t n) {
  if (n == 0) throw Error("chi_0 excluded");
  unsigned k = scale_of(n);
  std::vector<std::uint8_t> bits(k);
  for (unsigned i = 0; i < k; ++i) bits[i] = static_cast<std::uint8_t>((n >> (k - 1 - i)) & 1U);
  return MultiIndex(std::move(bits));
}

unsigned scale_of(std::uint64_t n) {
  if (n == 0) throw Error("index must be positive");
  return static_cast<unsigned>(std::bit_width(n) - 1);
}

unsigned chaos_order(std::uint64_t paley_n) {
  if (paley_n == 0) throw Error("chaos order undefined for w_0");
  return static_cast<unsigned>(std::popcount(offset_in_scale(paley_n))) + 1;
}

PiecewisePoly rademacher(unsigned k, unsigned level) {
  if (level < k + 1) throw Error("insufficient resolution");
  std::vector<Polynomial> pieces(std::size_t{1} << level);
  const unsigned shift = level - k - 1;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    pieces[i] = Polynomial::constant(((i >> shift) & 1U) ? -1 : 1);
  return PiecewisePoly(level, std::move(pieces));
}

PiecewisePoly rademacher(unsigned k) { return rademacher(k, k + 1); }

PiecewisePoly walsh_fn(std::uint64_t paley_n, unsigned level) {
  const unsigned k = scale_of(paley_n);
  if (level < k + 1) throw Error("insufficient resolution");
  std::vector<Polynomial> pieces(std::size_t{1} << level);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    // r_v contributes the (v+1)-th binary digit of t, i.e. bit level-1-v of i.
    unsigned parity = 0;
    for (unsigned v = 0; v <= k; ++v)
      if ((paley_n >> v) & 1U) parity ^= static_cast<unsigned>((i >> (level - 1 - v)) & 1U);
    pieces[i] = Polynomial::constant(parity ? -1 : 1);
  }
  return PiecewisePoly(level, std::move(pieces));
}

PiecewisePoly walsh_fn(std::uint64_t paley_n) { return walsh_fn(paley_n, scale_of(paley_n) + 1); }

PiecewisePoly haar_generator() { return rademacher(0, 1); }

ScaledPoly haar_fn(std::uint64_t natural_n) {
  if (natural_n == 0) throw Error("chi_0 excluded; use affine_element(f, 0)");
  return affine_element(haar_generator(), natural_n);
}

WalshMatrixLevel::WalshMatrixLevel(unsigned k, std::vector<int> signs) : k_(k), signs_(std::move(signs)) {
  if (signs_.size() != dim() * dim()) throw Error("walsh matrix has wrong size");
}

int WalshMatrixLevel::epsilon(const MultiIndex& alpha, const MultiIndex& beta) const {
  if (alpha.size() != k_ || beta.size() != k_) throw Error("multi-index length differs from matrix level");
  return sign(offset_in_scale(paley_index(beta)), offset_in_scale(natural_index(alpha)));
}

bool WalshMatrixLevel::is_unitary() const {
  const std::size_t d = dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < d; ++i) s += sign(i, a) * sign(i, b);
      if (s != (a == b ? static_cast<std::int64_t>(d) : 0)) return false;
    }
  }
  return true;
}

WalshMatrixLevel walsh_matrix(unsigned k) {
  if (k > 16) throw Error("walsh matrix level too large");
  const std::size_t d = std::size_t{1} << k;
  const std::uint64_t base = std::uint64_t{1} << k;
  std::vector<PiecewisePoly> walsh;
  walsh.reserve(d);
  for (std::size_t i = 0; i < d; ++i) walsh.push_back(walsh_fn(base + i, k + 1));

  std::vector<int> signs(d * d);
  const Rational scale = pow2(static_cast<long>(k));
  for (std::size_t j = 0; j < d; ++j) {
    // (chi_{2^k+j}, w) * 2^{k/2} = 2^k (poly, w) since chi carries 2^{k/2}.
    const ScaledPoly chi = haar_fn(base + j);
    for (std::size_t i = 0; i < d; ++i) {
      Rational s = scale * inner_product(chi.poly, walsh[i]);
      if (s == 1) {
        signs[i * d + j] = 1;
      } else if (s == -1) {
        signs[i * d + j] = -1;
      } else {
        throw Error("walsh matrix entry is not a sign: " + s.get_str());
      }
    }
  }
  return WalshMatrixLevel(k, std::move(signs));
}

}  // namespace spline_affine
