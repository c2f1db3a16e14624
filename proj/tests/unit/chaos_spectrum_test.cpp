#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "spline_affine/affine_operators.hpp"
#include "spline_affine/chaos_spectrum.hpp"
#include "spline_affine/walsh_index.hpp"

using namespace spline_affine;
using spline_affine::testing::Gen;

namespace {

PiecewisePoly lambda() { return PiecewisePoly(0, {Polynomial::affine(-2, 1)}); }

// Recursion gamma_1 = 0, gamma_{m+1} = (gamma_m + 2/3) / 4.
Rational gamma_by_recursion(unsigned m) {
  Rational g = 0;
  for (unsigned i = 1; i < m; ++i) g = (g + make_rational(2, 3)) / 4;
  return g;
}

}  // namespace

TEST(WalshCoeff, Examples) {
  for (unsigned m = 1; m <= 4; ++m) EXPECT_EQ(walsh_coeff(build_spline(m).poly, 1), 1);
  EXPECT_EQ(walsh_coeff(build_spline(1).poly, 7), make_rational(-1, 2));
  EXPECT_EQ(walsh_coeff(build_spline(1).poly, 2), 0);
  EXPECT_THROW(walsh_coeff(lambda(), 0), Error);
}

TEST(WalshSpectrum, MatchesDirectIntegration) {
  Gen g(73);
  std::vector<PiecewisePoly> fs{build_spline(1).poly, build_spline(3).poly, lambda()};
  for (int i = 0; i < 10; ++i) fs.push_back(g.piecewise(5, 3));
  for (const auto& f : fs) {
    const auto c = walsh_spectrum(f, 200);
    ASSERT_EQ(c.size(), 201u);
    EXPECT_EQ(c[0], mean(f));
    for (std::uint64_t n = 1; n <= 200; ++n) EXPECT_EQ(c[n], walsh_coeff(f, n)) << n;
  }
}

TEST(Decompose, OrderKeys) {
  const ChaosDecomposition d1 = decompose(1, 255);
  std::set<unsigned> keys;
  for (const auto& [k, v] : d1.by_order) keys.insert(k);
  EXPECT_EQ(keys, (std::set<unsigned>{1, 3}));

  const ChaosDecomposition d2 = decompose(2, 255);
  for (const auto& [k, v] : d2.by_order) EXPECT_TRUE(k == 1 || k == 3 || k == 5) << k;
  EXPECT_EQ(d2.partial_sq_norm(1), 1);
  EXPECT_EQ(d1.partial_sq_norm(1), 1);
}

TEST(Decompose, Preconditions) {
  EXPECT_THROW(decompose(1, 6), Error);
  EXPECT_THROW(decompose(0, 255), Error);
}

TEST(Decompose, ParsevalBookkeeping) {
  for (unsigned m = 1; m <= 6; ++m) {
    const ChaosDecomposition d = decompose(m, 4096);
    EXPECT_EQ(d.coeffs[1], 1);
    Rational s = 0;
    for (std::uint64_t n = 1; n <= 4096; ++n) s += d.coeffs[n] * d.coeffs[n];
    EXPECT_EQ(s + d.residual, squared_norm(build_spline(m).poly)) << m;
    EXPECT_EQ(d.norm_sq, squared_norm(build_spline(m).poly));
    EXPECT_GE(d.residual, 0);
    Rational by_order = 0;
    for (const auto& [k, v] : d.partial_sq_norms) by_order += v;
    EXPECT_EQ(by_order + d.residual, d.norm_sq);
  }
}

TEST(Decompose, ResidualDecreasesWithTruncation) {
  for (unsigned m = 1; m <= 3; ++m) {
    Rational prev = decompose(m, 7).residual;
    for (std::uint64_t n = 15; n <= 4095; n = 2 * n + 1) {
      const Rational r = decompose(m, n).residual;
      EXPECT_LE(r, prev);
      prev = r;
    }
    EXPECT_GT(prev, 0);
  }
}

TEST(Decompose, OddOrdersOnly) {
  for (unsigned m = 1; m <= 6; ++m) {
    const ChaosDecomposition d = decompose(m, 4096);
    for (std::uint64_t n = 1; n <= 4096; ++n) {
      const unsigned order = chaos_order(n);
      if (order % 2 == 0 || order > 2 * m + 1) EXPECT_EQ(d.coeffs[n], 0) << m << " " << n;
    }
    for (const auto& [k, v] : d.by_order) {
      EXPECT_EQ(k % 2, 1u);
      EXPECT_LE(k, 2 * m + 1);
      for (const auto& [n, c] : v) EXPECT_NE(sgn(c), 0);
    }
    // every order 3..2m+1 occurs once the truncation reaches its first index 2^d - 1
    for (unsigned s = 1; s <= m; ++s)
      if ((std::uint64_t{1} << (2 * s + 1)) - 1 <= 4096) EXPECT_TRUE(d.by_order.contains(2 * s + 1)) << m << " " << s;
  }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(spline_affine::gamma(1), 0);
  EXPECT_EQ(spline_affine::gamma(2), make_rational(1, 6));
  EXPECT_EQ(spline_affine::gamma(10), make_rational(2, 9) * (1 - pow2(-18)));
  EXPECT_THROW(spline_affine::gamma(0), Error);
}

TEST(Gamma, RecursionAndClosedForm) {
  for (unsigned m = 1; m <= 20; ++m) {
    EXPECT_EQ(spline_affine::gamma(m), gamma_by_recursion(m)) << m;
    EXPECT_EQ(spline_affine::gamma(m + 1), (spline_affine::gamma(m) + make_rational(2, 3)) / 4) << m;
    EXPECT_LT(spline_affine::gamma(m), make_rational(2, 9));
  }
}

TEST(Lemma3, Examples) {
  EXPECT_TRUE(verify_lemma3(1));
  EXPECT_EQ(decompose(1, 255).coeffs[7], make_rational(-1, 2));
  EXPECT_TRUE(verify_lemma3(2));
  EXPECT_EQ(decompose(2, 255).coeffs[7], make_rational(-2, 3));
  for (unsigned m = 1; m <= 6; ++m) EXPECT_TRUE(verify_lemma3(m)) << m;
}

TEST(Lemma3, DetectsMismatch) {
  ChaosDecomposition d = decompose(2, 255);
  d.coeffs[11] += 1;
  EXPECT_EQ(lemma3_mismatches(d), (std::vector<std::uint64_t>{11}));
  d.coeffs[11] -= 1;
  d.coeffs[13] = 1;  // 13 = 8 + 5 has order 3 but is off the pattern
  EXPECT_EQ(lemma3_mismatches(d), (std::vector<std::uint64_t>{13}));
  ChaosDecomposition untagged = decompose(build_spline(2).poly, 255);
  EXPECT_THROW(lemma3_mismatches(untagged), Error);
}

TEST(SimpleSpectrum, Examples) {
  EXPECT_TRUE(is_simple_spectrum({MultiIndex{1}}));
  EXPECT_FALSE(is_simple_spectrum({MultiIndex{1}, MultiIndex{1, 1}}));
  EXPECT_TRUE(is_simple_spectrum({}));
  std::set<MultiIndex> pattern;
  for (unsigned k = 0; k + 2 <= 10; ++k) {
    std::vector<std::uint8_t> bits{1, 1};
    bits.resize(2 + k, 0);
    pattern.insert(MultiIndex(bits));
  }
  EXPECT_TRUE(is_simple_spectrum(pattern));
  EXPECT_TRUE(has_modulated_chaos_pattern(pattern));
}

TEST(SimpleSpectrum, MatchesPairwiseFactorizationCheck) {
  // alpha beta = alpha' beta' with beta != beta' in the set exists iff some
  // element is a proper suffix of another.
  Gen g(79);
  for (int i = 0; i < 200; ++i) {
    std::set<MultiIndex> s;
    const long size = g.integer(1, 5);
    for (long k = 0; k < size; ++k) s.insert(g.multi_index(4));
    bool clash = false;
    for (const auto& b : s)
      for (const auto& b2 : s)
        if (b != b2) {
          for (const auto& a : MultiIndex::all_of_length(static_cast<unsigned>(b2.size() > b.size() ? b2.size() - b.size() : 0)))
            if (concat(a, b) == b2 && !a.empty()) clash = true;
        }
    EXPECT_EQ(is_simple_spectrum(s), !clash);
  }
}

TEST(SimpleSpectrum, ComponentSpectraAreSuffixFree) {
  for (unsigned m = 1; m <= 4; ++m) {
    const ChaosDecomposition d = decompose(m, 4096);
    for (unsigned s = 1; s <= m; ++s) {
      const auto spec = d.spectrum_of_order(2 * s + 1);
      EXPECT_FALSE(spec.empty());
      EXPECT_TRUE(is_simple_spectrum(spec)) << m << " " << s;
      EXPECT_TRUE(has_modulated_chaos_pattern(spec)) << m << " " << s;
    }
  }
}

TEST(Orthogonality, TruncatedW1SquaredLambda) {
  const PiecewisePoly f = truncated_w1_squared_lambda(1024);
  const OrthogonalityReport rep = orthogonality_report(f, 4);
  EXPECT_EQ(rep.system_size, 31u);
  EXPECT_TRUE(rep.orthogonal());
  EXPECT_EQ(rep.walsh_max_offdiag, 0);
  EXPECT_EQ(rep.haar_max_offdiag, 0.0);
  EXPECT_EQ(rep.norm_sq, squared_norm(f));
  // truncation keeps k = 0..7, so the norm falls short of 1/3 by 4^{-8}/3
  EXPECT_EQ(rep.norm_sq, (1 - pow2(-16)) / 3);
  EXPECT_EQ(squared_norm(w1(w1(lambda()))), make_rational(1, 3));
}

TEST(Orthogonality, RademacherGivesClassicalSystems) {
  const OrthogonalityReport rep = orthogonality_report(rademacher(0), 4);
  EXPECT_TRUE(rep.orthogonal());
  EXPECT_EQ(rep.norm_sq, 1);
}

TEST(Orthogonality, SplineIsNotOrthogonal) {
  const OrthogonalityReport rep = orthogonality_report(build_spline(1).poly, 3);
  EXPECT_FALSE(rep.walsh_offdiag_zero && rep.haar_offdiag_zero);
  EXPECT_TRUE(sgn(rep.walsh_max_offdiag) > 0 || rep.haar_max_offdiag > 0);
  EXPECT_TRUE(rep.walsh_diag_equal_norm);
  EXPECT_TRUE(rep.haar_diag_equal_norm);
}

TEST(Orthogonality, Preconditions) {
  EXPECT_THROW(orthogonality_report(PiecewisePoly::zero(2), 2), Error);
  EXPECT_THROW(orthogonality_report(lambda() + PiecewisePoly::constant(1), 2), Error);
}
