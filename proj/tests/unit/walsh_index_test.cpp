#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "generators.hpp"
#include "spline_affine/affine_operators.hpp"
#include "spline_affine/riesz_analysis.hpp"
#include "spline_affine/walsh_index.hpp"

using namespace spline_affine;
using spline_affine::testing::Gen;

namespace {

std::vector<MultiIndex> words_up_to(unsigned k) {
  std::vector<MultiIndex> out;
  for (unsigned l = 0; l <= k; ++l) {
    auto w = MultiIndex::all_of_length(l);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::uint64_t bit_reverse(std::uint64_t x, unsigned width) {
  std::uint64_t r = 0;
  for (unsigned b = 0; b < width; ++b) r |= ((x >> b) & 1U) << (width - 1 - b);
  return r;
}

}  // namespace

TEST(MultiIndex, ParseAndPrint) {
  EXPECT_EQ(MultiIndex::parse("101"), (MultiIndex{1, 0, 1}));
  EXPECT_EQ(MultiIndex::parse("").size(), 0u);
  EXPECT_EQ((MultiIndex{0, 1, 1}).to_string(), "011");
  EXPECT_EQ((MultiIndex{1, 1, 0, 1}).ones(), 3u);
  EXPECT_THROW(MultiIndex::parse("102"), Error);
  EXPECT_THROW((MultiIndex{0, 2}), Error);
}

TEST(MultiIndex, AllOfLength) {
  EXPECT_EQ(MultiIndex::all_of_length(0).size(), 1u);
  const auto w = MultiIndex::all_of_length(4);
  EXPECT_EQ(w.size(), 16u);
  EXPECT_EQ(std::set<MultiIndex>(w.begin(), w.end()).size(), 16u);
}

TEST(Concat, Examples) {
  const MultiIndex beta{0, 1};
  EXPECT_EQ(concat(MultiIndex{}, beta), beta);
  EXPECT_EQ(concat(beta, MultiIndex{}), beta);
  EXPECT_EQ(concat(MultiIndex{1}, beta), (MultiIndex{1, 0, 1}));
}

TEST(Concat, AssociativeAndAdditiveLength) {
  Gen g(31);
  for (int i = 0; i < 200; ++i) {
    const MultiIndex a = g.multi_index(8), b = g.multi_index(8), c = g.multi_index(8);
    EXPECT_EQ(concat(concat(a, b), c), concat(a, concat(b, c)));
    EXPECT_EQ(concat(a, b).size(), a.size() + b.size());
  }
}

TEST(ProperSuffix, Examples) {
  EXPECT_TRUE(is_proper_suffix(MultiIndex{1}, MultiIndex{1, 1}));
  EXPECT_FALSE(is_proper_suffix(MultiIndex{1}, MultiIndex{1, 0}));
  const MultiIndex b{1, 0, 1};
  EXPECT_FALSE(is_proper_suffix(b, b));
  EXPECT_TRUE(is_proper_suffix(MultiIndex{}, b));
  EXPECT_FALSE(is_proper_suffix(MultiIndex{}, MultiIndex{}));
}

TEST(ProperSuffix, MatchesDefinition) {
  Gen g(37);
  for (int i = 0; i < 300; ++i) {
    const MultiIndex a = g.multi_index(4), b = g.multi_index(4);
    if (!a.empty()) EXPECT_TRUE(is_proper_suffix(b, concat(a, b)));
    // brute force: some nonempty prefix completes b to the longer word
    const MultiIndex w = g.multi_index(6);
    bool expected = false;
    if (b.size() < w.size()) {
      const std::size_t cut = w.size() - b.size();
      expected = std::equal(b.bits().begin(), b.bits().end(), w.bits().begin() + static_cast<std::ptrdiff_t>(cut));
    }
    EXPECT_EQ(is_proper_suffix(b, w), expected);
  }
}

TEST(Paley, Examples) {
  EXPECT_EQ(paley_index(MultiIndex{}), 1u);
  EXPECT_EQ(paley_index(MultiIndex{1, 0}), 5u);
  EXPECT_EQ(paley_index(MultiIndex{1, 1}), 7u);
  EXPECT_THROW(paley_multiindex(0), Error);
  try {
    paley_multiindex(0);
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "w_0 excluded");
  }
}

TEST(Natural, Examples) {
  EXPECT_EQ(natural_index(MultiIndex{}), 1u);
  EXPECT_EQ(natural_index(MultiIndex{1, 0}), 6u);
  EXPECT_EQ(natural_index(MultiIndex{0, 1}), 5u);
  EXPECT_THROW(natural_multiindex(0), Error);
}

TEST(Enumerations, BijectiveRoundTrips) {
  const auto words = words_up_to(12);
  std::set<std::uint64_t> paley, natural;
  for (const auto& a : words) {
    const std::uint64_t p = paley_index(a), n = natural_index(a);
    EXPECT_EQ(paley_multiindex(p), a);
    EXPECT_EQ(natural_multiindex(n), a);
    EXPECT_EQ(scale_of(p), a.size());
    EXPECT_EQ(scale_of(n), a.size());
    paley.insert(p);
    natural.insert(n);
  }
  // images are exactly 1 .. 2^13 - 1
  EXPECT_EQ(paley.size(), words.size());
  EXPECT_EQ(*paley.begin(), 1u);
  EXPECT_EQ(*paley.rbegin(), (1u << 13) - 1);
  EXPECT_EQ(natural, paley);
}

TEST(Enumerations, NaturalIsBitReversedPaley) {
  for (const auto& a : words_up_to(10)) {
    const unsigned k = static_cast<unsigned>(a.size());
    const std::uint64_t top = std::uint64_t{1} << k;
    EXPECT_EQ(natural_index(a) - top, bit_reverse(paley_index(a) - top, k));
  }
}

TEST(ChaosOrder, Examples) {
  EXPECT_EQ(chaos_order(1), 1u);
  EXPECT_EQ(chaos_order(7), 3u);
  for (unsigned k = 0; k < 40; ++k) EXPECT_EQ(chaos_order(std::uint64_t{1} << k), 1u);
  EXPECT_THROW(chaos_order(0), Error);
}

TEST(ChaosOrder, CountsRademacherFactors) {
  for (const auto& a : words_up_to(10)) EXPECT_EQ(chaos_order(paley_index(a)), 1 + a.ones());
}

TEST(Rademacher, Examples) {
  const PiecewisePoly r = rademacher(0, 1);
  EXPECT_EQ(eval(r, make_rational(1, 4)), 1);
  EXPECT_EQ(eval(r, make_rational(3, 4)), -1);
  for (unsigned k = 0; k < 6; ++k) EXPECT_EQ(rademacher(k) * rademacher(k), PiecewisePoly::constant(1));
  EXPECT_THROW(rademacher(3, 3), Error);
  try {
    rademacher(3, 3);
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "insufficient resolution");
  }
}

TEST(Rademacher, SignOfSineAtGridPoints) {
  for (unsigned k = 0; k < 5; ++k) {
    const PiecewisePoly r = rademacher(k, 7);
    for (long i = 0; i < 128; ++i) {
      // r_k on [i/128, (i+1)/128) is (-1)^{floor(2^{k+1} t)}
      const long half_periods = (i * (2L << k)) / 128;
      EXPECT_EQ(eval(r, make_rational(i, 128)), half_periods % 2 == 0 ? 1 : -1);
    }
  }
}

TEST(Rademacher, Orthogonal) {
  for (unsigned j = 0; j < 8; ++j)
    for (unsigned k = 0; k < 8; ++k) EXPECT_EQ(inner_product(rademacher(j), rademacher(k)), j == k ? 1 : 0);
}

TEST(Walsh, Examples) {
  EXPECT_EQ(walsh_fn(1), rademacher(0));
  EXPECT_EQ(walsh_fn(7), rademacher(0) * rademacher(1) * rademacher(2));
  EXPECT_EQ(walsh_fn(5), rademacher(0) * rademacher(2));
  EXPECT_THROW(walsh_fn(0), Error);
  EXPECT_THROW(walsh_fn(8, 3), Error);
}

TEST(Walsh, ValueFormulaOnCells) {
  const unsigned level = 6;
  for (std::uint64_t n = 1; n < 64; ++n) {
    const PiecewisePoly w = walsh_fn(n, level);
    for (std::uint64_t i = 0; i < 64; ++i) {
      const int expected = std::popcount(n & bit_reverse(i, level)) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(eval(w, make_rational(static_cast<long>(i), 64)), expected) << n << " " << i;
    }
  }
}

TEST(Walsh, Orthonormal) {
  std::vector<PiecewisePoly> w;
  for (std::uint64_t n = 1; n <= 256; ++n) w.push_back(walsh_fn(n));
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a; b < w.size(); ++b) ASSERT_EQ(inner_product(w[a], w[b]), a == b ? 1 : 0) << a << " " << b;
}

TEST(Haar, Examples) {
  const ScaledPoly h1 = haar_fn(1);
  EXPECT_EQ(h1.sqrt2_exponent, 0u);
  EXPECT_EQ(h1.poly, haar_generator());
  EXPECT_EQ(haar_generator(), rademacher(0));
  EXPECT_THROW(haar_fn(0), Error);
}

TEST(Haar, Support) {
  for (std::uint64_t n = 1; n < 128; ++n) {
    const unsigned k = scale_of(n);
    const std::uint64_t j = n - (std::uint64_t{1} << k);
    const ScaledPoly h = haar_fn(n);
    EXPECT_EQ(h.sqrt2_exponent, k);
    const unsigned fine = h.poly.level();
    const std::uint64_t lo = j << (fine - k), hi = (j + 1) << (fine - k);
    for (std::uint64_t i = 0; i < h.poly.piece_count(); ++i)
      EXPECT_EQ(h.poly.piece(i).is_zero(), i < lo || i >= hi) << n << " " << i;
  }
}

TEST(Haar, GramIsIdentity) {
  std::vector<ScaledPoly> sys{affine_element(haar_generator(), 0)};
  for (std::uint64_t n = 1; n < 256; ++n) sys.push_back(haar_fn(n));
  const GramMatrix g = gram(sys);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) ASSERT_EQ(g(a, b), QuadraticNumber(a == b ? 1 : 0));
}

TEST(WalshMatrix, LevelZero) {
  const WalshMatrixLevel w = walsh_matrix(0);
  EXPECT_EQ(w.dim(), 1u);
  EXPECT_EQ(w.sign(0, 0), 1);
}

TEST(WalshMatrix, Unitary) {
  for (unsigned k = 0; k <= 8; ++k) EXPECT_TRUE(walsh_matrix(k).is_unitary()) << k;
  EXPECT_FALSE(WalshMatrixLevel(1, {1, 1, 1, 1}).is_unitary());
}

TEST(WalshMatrix, MatchesSignFormula) {
  // On the j-th cell of level k only r_0..r_{k-1} vary, and r_k times the
  // Haar bump is 1, so the entry is the product of the lower factors there.
  for (unsigned k = 0; k <= 6; ++k) {
    const WalshMatrixLevel w = walsh_matrix(k);
    for (std::uint64_t i = 0; i < w.dim(); ++i)
      for (std::uint64_t j = 0; j < w.dim(); ++j)
        EXPECT_EQ(w.sign(i, j), std::popcount(i & bit_reverse(j, k)) % 2 == 0 ? 1 : -1);
  }
}

TEST(WalshMatrix, HaarBlockToWalshBlock) {
  for (unsigned k = 0; k <= 6; ++k) {
    const WalshMatrixLevel w = walsh_matrix(k);
    const std::uint64_t top = std::uint64_t{1} << k;
    for (std::uint64_t i = 0; i < top; ++i) {
      // w_{2^k+i} = 2^{-k/2} sum_j signs(i,j) chi_{2^k+j}; chi's poly carries 2^{k/2}
      std::vector<std::pair<Rational, PiecewisePoly>> terms;
      for (std::uint64_t j = 0; j < top; ++j) terms.emplace_back(w.sign(i, j), haar_fn(top + j).poly);
      EXPECT_EQ(linear_combine(terms), walsh_fn(top + i)) << k << " " << i;
    }
  }
}

TEST(WalshMatrix, EpsilonRejectsWrongLength) {
  EXPECT_THROW(walsh_matrix(2).epsilon(MultiIndex{1}, MultiIndex{0, 1}), Error);
}
