#include "spline_affine/riesz_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "spline_affine/affine_operators.hpp"
#include "spline_affine/chaos_spectrum.hpp"
#include "spline_affine/parallel.hpp"
#include "spline_affine/walsh_index.hpp"

namespace spline_affine {

namespace {

double sqrt_rounded(const Rational& x, bool up) {
  if (sgn(x) < 0) throw Error("square root of a negative bound");
  constexpr mp_bitcnt_t kBits = 256;
  mpf_class v(x, kBits);
  v = sqrt(v);
  const double d = v.get_d();  // truncates toward zero
  return up ? std::nextafter(d, std::numeric_limits<double>::infinity()) : d;
}

// Outward-rounded interval sum.
std::pair<double, double> add_interval(std::pair<double, double> a, std::pair<double, double> b) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  return {std::nextafter(a.first + b.first, -kInf), std::nextafter(a.second + b.second, kInf)};
}

// max(p_s, level) with sum max(0, level - p_s) = budget.
std::vector<Rational> water_fill(const std::vector<Rational>& p, const Rational& budget) {
  if (p.empty()) return {};
  std::vector<Rational> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  Rational acc = budget;
  Rational level = 0;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    acc += sorted[t];
    level = acc / static_cast<long>(t + 1);
    if (t + 1 == sorted.size() || level <= sorted[t + 1]) break;
  }
  std::vector<Rational> out;
  for (const auto& x : p) out.push_back(x > level ? x : level);
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

GramMatrix::GramMatrix(std::vector<std::uint64_t> indices, std::vector<QuadraticNumber> entries)
    : indices_(std::move(indices)), entries_(std::move(entries)) {
  if (entries_.size() != indices_.size() * indices_.size()) throw Error("gram entries do not match index count");
}

bool GramMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

SymmetricMatrix GramMatrix::to_double() const {
  SymmetricMatrix m(size());
  for (std::size_t i = 0; i < m.data.size(); ++i) m.data[i] = entries_[i].to_double();
  return m;
}

GramMatrix gram(const std::vector<ScaledPoly>& system, std::vector<std::uint64_t> indices) {
  if (system.empty()) throw Error("gram of an empty system");
  const std::size_t n = system.size();
  if (indices.empty()) {
    indices.resize(n);
    for (std::size_t i = 0; i < n; ++i) indices[i] = i;
  }
  std::vector<QuadraticNumber> entries(n * n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) entries[i * n + j] = inner_product(system[i], system[j]);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) entries[i * n + j] = entries[j * n + i];
  return GramMatrix(std::move(indices), std::move(entries));
}

GramMatrix affine_gram(const PiecewisePoly& f, std::uint64_t first, std::uint64_t count) {
  if (first > 1) throw Error("affine gram starts at index 0 or 1");
  if (count == 0) throw Error("gram of an empty system");
  const std::uint64_t end = first + count;
  if (scale_of(end) > kMaxLevel) throw Error("depth exceeds limit");
  const unsigned level = f.level();

  // M_d = int_0^1 s^d f(s) ds
  std::vector<Rational> moments(f.degree() + 1);
  for (std::size_t d = 0; d < moments.size(); ++d) {
    for (std::size_t i = f.window_begin(); i < f.window_end(); ++i) {
      std::vector<Rational> c(d, Rational(0));
      const auto& pc = f.piece(i).coeffs();
      c.insert(c.end(), pc.begin(), pc.end());
      moments[d] += Polynomial(std::move(c))
                        .integrate(make_rational(Integer(static_cast<unsigned long>(i)), Integer(1) << level),
                                   make_rational(Integer(static_cast<unsigned long>(i + 1)), Integer(1) << level));
    }
  }

  // row[p] = (f, f_p)
  std::vector<QuadraticNumber> row(end);
  const ScaledPoly base{f, 0};
  parallel_for(end > 1 ? end - 1 : 0, [&](std::size_t idx) {
    const std::uint64_t p = idx + 1;
    const unsigned k = scale_of(p);
    const std::uint64_t j = p - (std::uint64_t{1} << k);
    if (k < level) {
      row[p] = inner_product(base, affine_element(f, p));
      return;
    }
    // f is a single polynomial P on the support of f_p; substitute s = 2^k t - j.
    const Polynomial& piece = f.piece(j >> (k - level));
    const Rational step = pow2(-static_cast<long>(k));
    const Polynomial shifted = piece.compose_affine(step, Rational(Integer(static_cast<unsigned long>(j))) * step);
    Rational v = 0;
    for (std::size_t d = 0; d < shifted.coeffs().size(); ++d) v += shifted.coeffs()[d] * moments[d];
    row[p] = QuadraticNumber::sqrt2_power(-static_cast<long>(k)) * QuadraticNumber(v);
  });

  const Rational norm_sq = squared_norm(f);
  const Rational mean_f = mean(f);
  std::vector<std::uint64_t> indices(count);
  for (std::uint64_t i = 0; i < count; ++i) indices[i] = first + i;
  std::vector<QuadraticNumber> entries(count * count);
  for (std::uint64_t a = 0; a < count; ++a) {
    const std::uint64_t n = indices[a];
    for (std::uint64_t b = a; b < count; ++b) {
      const std::uint64_t n2 = indices[b];
      QuadraticNumber e;
      if (n == 0) {
        e = n2 == 0 ? QuadraticNumber(1)
                    : QuadraticNumber::sqrt2_power(-static_cast<long>(scale_of(n2))) * QuadraticNumber(mean_f);
      } else if (n == n2) {
        e = QuadraticNumber(norm_sq);
      } else {
        const unsigned k = scale_of(n), k2 = scale_of(n2);
        const std::uint64_t j = n - (std::uint64_t{1} << k), j2 = n2 - (std::uint64_t{1} << k2);
        if (k2 > k && (j2 >> (k2 - k)) == j) {
          const unsigned delta = k2 - k;
          e = row[(std::uint64_t{1} << delta) + (j2 - (j << delta))];
        }
      }
      entries[a * count + b] = e;
      entries[b * count + a] = e;
    }
  }
  return GramMatrix(std::move(indices), std::move(entries));
}

ExtremeEigenvalues extreme_eigenvalues(const GramMatrix& g, double tol) {
  EigenResult r = jacobi_eigenvalues(g.to_double(), tol);
  return {r.eigenvalues.front(), r.eigenvalues.back(), r.offdiag_residual};
}

PiecewisePoly affine_generator(unsigned m) {
  return m == 0 ? haar_generator() : build_spline(m).poly;
}

std::vector<ScaledPoly> spline_affine_system(unsigned m, unsigned depth) {
  if (depth > 16) throw Error("depth exceeds limit");
  return affine_system(affine_generator(m), std::size_t{1} << depth);
}

NormSumCertificate norm_sum_certificate(unsigned m, std::uint64_t max_index) {
  if (m == 0) throw Error("norm sum certificate needs m >= 1");
  const ChaosDecomposition d = decompose(m, max_index);
  NormSumCertificate cert;
  cert.m = m;
  cert.max_index = max_index;
  cert.total = {0.0, 0.0};
  cert.tail = {0.0, 0.0};
  // Each bracket charges the whole residual R to its order, since every
  // spectrum is infinite. The sums share R instead: the worst case of
  // sum sqrt(P_s + r_s) with sum r_s = R raises the smallest P_s to a common
  // level (water filling), which is never looser than summing brackets.
  std::vector<Rational> parts;
  for (unsigned s = 1; s <= m; ++s) parts.push_back(d.partial_sq_norm(2 * s + 1));
  const std::vector<Rational> all_levels = water_fill(parts, d.residual);
  const std::vector<Rational> tail_levels =
      water_fill(std::vector<Rational>(parts.begin() + 1, parts.end()), d.residual);
  for (unsigned s = 1; s <= m; ++s) {
    const double lo = sqrt_rounded(parts[s - 1], false);
    cert.component_bounds.emplace_back(lo, sqrt_rounded(parts[s - 1] + d.residual, true));
    cert.total = add_interval(cert.total, {lo, sqrt_rounded(all_levels[s - 1], true)});
    if (s >= 2) cert.tail = add_interval(cert.tail, {lo, sqrt_rounded(tail_levels[s - 2], true)});
  }

  // Closed-form tail of the order-3 slice beyond max_index: coefficients
  // 2^{-(k+1)} at n = 3 + 2^{k+2} for k >= K sum in square to 4^{-K}/3.
  long first_missing = 1;
  while (3 + (std::uint64_t{1} << (first_missing + 2)) <= max_index) ++first_missing;
  const Rational tail = pow2(-2 * first_missing) / 3;
  cert.first_component_sq = d.partial_sq_norm(3) + tail;
  const Rational shifted = gamma(m) + make_rational(1, 2);
  cert.first_component_sq_closed_form = shifted * shifted + make_rational(1, 12);
  cert.first_component_matches =
      cert.first_component_sq == cert.first_component_sq_closed_form && lemma3_mismatches(d).empty();
  cert.first_component_below_7_9 = cert.first_component_sq_closed_form < make_rational(49, 81);
  return cert;
}

bool BoundsCertificate::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

BoundsCertificate riesz_bounds_estimate(unsigned m, unsigned depth, double tol) {
  if (depth == 0) throw Error("depth must be at least 1");
  if (depth > 16) throw Error("depth exceeds limit");
  const GramMatrix g = affine_gram(affine_generator(m), 0, std::uint64_t{1} << depth);
  const ExtremeEigenvalues ev = extreme_eigenvalues(g, tol);
  BoundsCertificate c;
  c.m = m;
  c.depth = depth;
  c.lambda_min = ev.lambda_min;
  c.lambda_max = ev.lambda_max;
  c.A_est = std::sqrt(std::max(0.0, ev.lambda_min));
  c.B_est = std::sqrt(ev.lambda_max);
  c.eig_residual = ev.residual;
  return c;
}

double deviation_norm(unsigned m, unsigned depth, double tol) {
  if (m == 0) throw Error("deviation norm needs m >= 1");
  if (depth == 0) throw Error("depth must be at least 1");
  if (depth > 16) throw Error("depth exceeds limit");
  // chi_n - psi_{m,n} is the n-th dilate of chi - psi_m; n = 0 vanishes.
  const PiecewisePoly diff = haar_generator() - build_spline(m).poly;
  const ExtremeEigenvalues ev = extreme_eigenvalues(affine_gram(diff, 1, (std::uint64_t{1} << depth) - 1), tol);
  return std::sqrt(std::max(0.0, ev.lambda_max));
}

BoundsCertificate full_report(unsigned m, unsigned depth, std::uint64_t max_index, double tol) {
  if (m == 0) throw Error("spline order must be at least 1");

  const SplineSpec spec = build_spline(m);  // throws if (1.1)/(1.2) fail
  BoundsCertificate c = riesz_bounds_estimate(m, depth, tol);
  c.max_index = max_index;

  const bool shape_ok = is_antiperiodic(spec.poly) && inner_product(spec.poly, rademacher(0)) == 1 &&
                        smoothness_order(spec.poly) == static_cast<int>(m) - 1;
  c.checks.push_back({"spline_equations",
                      satisfies_derivative_identity(spec) && satisfies_initial_conditions(spec) && shape_ok,
                      "derivative identity, initial conditions, antiperiodicity, (psi,r)=1, C^{m-1}"});

  const auto bad = lemma3_mismatches(decompose(m, max_index));
  c.checks.push_back({"order3_closed_form", bad.empty(),
                      bad.empty() ? "all order-3 coefficients match" : "first mismatch at n=" + std::to_string(bad[0])});

  const bool inside = c.lambda_min >= kLowerSpectralBound && c.lambda_max <= kUpperSpectralBound;
  c.checks.push_back({"section_spectrum", inside && c.eig_residual < tol,
                      "[" + format_double(c.lambda_min) + ", " + format_double(c.lambda_max) + "] in [0.01, 3.61]"});

  c.deviation_norm = deviation_norm(m, depth, tol);
  c.deviation_lambda_max = c.deviation_norm * c.deviation_norm;
  c.checks.push_back({"deviation_norm", c.deviation_norm <= kDeviationBound + 1e-9,
                      format_double(c.deviation_norm) + " <= 0.9"});

  const NormSumCertificate ns = norm_sum_certificate(m, max_index);
  c.norm_sum_interval = ns.total;
  c.checks.push_back({"norm_sum", ns.total.second < kDeviationBound,
                      "upper " + format_double(ns.total.second) + " < 0.9"});
  c.checks.push_back({"norm_sum_tail", ns.tail.second < kTailNormBound,
                      "upper " + format_double(ns.tail.second) + " < 0.12"});
  c.checks.push_back({"first_component_norm", ns.first_component_matches && ns.first_component_below_7_9,
                      "||f_1||^2 = " + ns.first_component_sq_closed_form.get_str() + " < 49/81"});
  return c;
}

}  // namespace spline_affine
