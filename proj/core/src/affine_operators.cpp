#include "spline_affine/affine_operators.hpp"

#include <algorithm>

namespace spline_affine {

namespace {

// f(2t) on the level L+1 partition, optionally modulated by r(t).
PiecewisePoly dilate(const PiecewisePoly& f, bool modulate) {
  const unsigned level = f.level();
  const std::size_t half = f.piece_count();
  if (f.is_zero()) return PiecewisePoly::zero(level + 1);
  std::vector<Polynomial> pieces(2 * half);
  for (std::size_t i = 0; i < 2 * half; ++i) {
    const Polynomial& src = f.piece(i % half);
    if (src.is_zero()) continue;
    const bool upper = i >= half;
    // On [1/2, 1) the argument 2t wraps to 2t - 1.
    Polynomial q = src.compose_affine(2, upper ? -1 : 0);
    if (modulate && upper) q *= Rational(-1);
    pieces[i] = std::move(q);
  }
  return PiecewisePoly(level + 1, std::move(pieces));
}

std::vector<PiecewisePoly> derivatives_up_to(const PiecewisePoly& f, unsigned order) {
  std::vector<PiecewisePoly> out{f};
  for (unsigned d = 0; d < order; ++d) out.push_back(derivative(out.back()));
  return out;
}

Rational breakpoint(std::size_t i, unsigned level) {
  return make_rational(Integer(static_cast<unsigned long>(i)), Integer(1) << level);
}

}  // namespace

PiecewisePoly w0(const PiecewisePoly& f) { return dilate(f, false); }
PiecewisePoly w1(const PiecewisePoly& f) { return dilate(f, true); }

PiecewisePoly w_op(int bit, const PiecewisePoly& f) {
  if (bit != 0 && bit != 1) throw Error("operator index must be 0 or 1");
  return dilate(f, bit == 1);
}

PiecewisePoly u_op(const PiecewisePoly& f) {
  if (sgn(mean(f)) != 0) throw Error("U requires zero-mean input");
  return Rational(4) * w1(volterra(f));
}

PiecewisePoly w_alpha(const PiecewisePoly& f, const MultiIndex& alpha) {
  PiecewisePoly out = f;
  for (std::size_t i = alpha.size(); i-- > 0;) out = w_op(alpha[i], out);
  return out;
}

ScaledPoly s_alpha(const PiecewisePoly& f, const MultiIndex& alpha) {
  return affine_element(f, natural_index(alpha));
}

bool operator==(const ScaledPoly& f, const ScaledPoly& g) {
  long diff = static_cast<long>(f.sqrt2_exponent) - static_cast<long>(g.sqrt2_exponent);
  if (diff % 2 != 0) return f.poly.is_zero() && g.poly.is_zero();
  return pow2(diff / 2) * f.poly == g.poly;
}

QuadraticNumber inner_product(const ScaledPoly& f, const ScaledPoly& g) {
  Rational ip = inner_product(f.poly, g.poly);
  if (sgn(ip) == 0) return {};
  return QuadraticNumber::sqrt2_power(static_cast<long>(f.sqrt2_exponent + g.sqrt2_exponent)) *
         QuadraticNumber(ip);
}

Rational squared_norm(const ScaledPoly& f) {
  return pow2(static_cast<long>(f.sqrt2_exponent)) * squared_norm(f.poly);
}

ScaledPoly affine_element(const PiecewisePoly& f, std::uint64_t n) {
  if (n == 0) return {PiecewisePoly::constant(1), 0};
  const unsigned k = scale_of(n);
  const std::uint64_t j = n - (std::uint64_t{1} << k);
  const std::size_t block = f.piece_count();
  const Rational slope = pow2(static_cast<long>(k));
  const Rational shift = -Rational(Integer(static_cast<unsigned long>(j)));

  std::vector<Polynomial> pieces;
  pieces.reserve(f.window_end() - f.window_begin());
  for (std::size_t i = f.window_begin(); i < f.window_end(); ++i)
    pieces.push_back(f.piece(i).compose_affine(slope, shift));
  return {PiecewisePoly::windowed(f.level() + k, j * block + f.window_begin(), std::move(pieces)), k};
}

std::vector<ScaledPoly> affine_system(const PiecewisePoly& f, std::size_t count) {
  std::vector<ScaledPoly> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(affine_element(f, n));
  return out;
}

Rational spline_kappa(unsigned m) { return pow2(static_cast<long>(m) * (m + 5) / 2); }

PiecewisePoly rademacher_product(unsigned m) {
  PiecewisePoly p = PiecewisePoly::constant(1);
  for (unsigned k = 0; k <= m; ++k) p = p * rademacher(k, m + 1);
  return p;
}

SplineSpec build_spline(unsigned m) {
  if (m == 0) throw Error("spline order must be at least 1; order 0 is the Haar generator");
  PiecewisePoly psi = rademacher(0);
  for (unsigned i = 0; i < m; ++i) psi = u_op(psi);
  SplineSpec spec{m, spline_kappa(m), std::move(psi)};
  if (!satisfies_initial_conditions(spec)) throw Error("spline violates initial conditions at t = 0");
  if (!satisfies_derivative_identity(spec)) throw Error("spline violates its m-th derivative identity");
  return spec;
}

bool satisfies_derivative_identity(const SplineSpec& spec) {
  PiecewisePoly d = spec.poly;
  for (unsigned i = 0; i < spec.m; ++i) d = derivative(d);
  return d == spec.kappa * rademacher_product(spec.m);
}

bool satisfies_initial_conditions(const SplineSpec& spec) {
  auto ds = derivatives_up_to(spec.poly, spec.m == 0 ? 0 : spec.m - 1);
  return std::all_of(ds.begin(), ds.end(), [](const PiecewisePoly& d) { return sgn(eval(d, 0)) == 0; });
}

bool is_antiperiodic(const PiecewisePoly& f) {
  if (f.is_zero()) return true;
  const PiecewisePoly g = f.level() == 0 ? refine(f, 1) : f;
  const std::size_t half = g.piece_count() / 2;
  const Rational minus_half = make_rational(-1, 2);
  for (std::size_t i = 0; i < half; ++i) {
    // On the upper piece, f(t) = -f_lower(t - 1/2).
    Polynomial expected = g.piece(i).compose_affine(1, minus_half) * Rational(-1);
    if (g.piece(i + half) != expected) return false;
  }
  return true;
}

int smoothness_order(const PiecewisePoly& f) {
  const unsigned level = f.level();
  const std::size_t count = f.piece_count();
  auto ds = derivatives_up_to(f, static_cast<unsigned>(f.degree()));
  int order = -1;
  for (const auto& d : ds) {
    for (std::size_t i = 0; i < count; ++i) {
      // Left limit at breakpoint (i+1)/2^L versus right limit there.
      const Rational x = breakpoint(i + 1, level);
      const Rational left = d.piece(i)(x);
      const Rational right = i + 1 < count ? d.piece(i + 1)(x) : d.piece(0)(Rational(0));
      if (left != right) return order;
    }
    ++order;
  }
  return order;
}

PiecewisePoly build_rho(unsigned m) {
  if (m == 0) throw Error("rho order must be at least 1");
  PiecewisePoly rho = PiecewisePoly::constant(1);
  for (unsigned i = 0; i < m; ++i) rho = Rational(4) * volterra(w1(rho));
  return rho;
}

PiecewisePoly granados_element(const PiecewisePoly& rho, unsigned k, std::uint64_t n) {
  if (k > 40 || n < (std::uint64_t{1} << k) || n >= (std::uint64_t{1} << (k + 1)))
    throw Error("walsh index out of range for scale k");
  PiecewisePoly dilated = rho;
  for (unsigned i = 0; i <= k; ++i) dilated = w0(dilated);
  return dilated * walsh_fn(n);
}

PiecewisePoly granados_element(unsigned m, unsigned k, std::uint64_t n) {
  return granados_element(build_rho(m), k, n);
}

}  // namespace spline_affine
