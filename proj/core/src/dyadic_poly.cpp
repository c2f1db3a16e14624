#include "spline_affine/dyadic_poly.hpp"

#include <algorithm>

namespace spline_affine {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::affine(const Rational& slope, const Rational& offset) {
  return Polynomial({offset, slope});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> a(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / static_cast<unsigned long>(i + 1);
  return Polynomial(std::move(a));
}

Polynomial Polynomial::compose_affine(const Rational& slope, const Rational& offset) const {
  // Horner in the polynomial ring: acc <- acc * (slope t + offset) + c_d.
  std::vector<Rational> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i] * offset;
      next[i + 1] += acc[i] * slope;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return Polynomial(std::move(acc));
}

Rational Polynomial::integrate(const Rational& lo, const Rational& hi) const {
  if (coeffs_.empty()) return 0;
  // Sum_d c_d (hi^{d+1} - lo^{d+1}) / (d+1), powers built incrementally.
  Rational total = 0, hp = hi, lp = lo;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (sgn(coeffs_[d]) != 0) total += coeffs_[d] * (hp - lp) / static_cast<unsigned long>(d + 1);
    hp *= hi;
    lp *= lo;
  }
  return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> r(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (sgn(p.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

// ------------------------------------------------------------- PiecewisePoly

namespace {

const Polynomial& zero_polynomial() {
  static const Polynomial kZero;
  return kZero;
}

void check_level(unsigned level) {
  if (level > kMaxLevel) throw Error("partition level exceeds " + std::to_string(kMaxLevel));
}

Rational breakpoint(std::size_t i, unsigned level) {
  return make_rational(Integer(static_cast<unsigned long>(i)), Integer(1) << level);
}

// Range of piece indices at fine_level covered by p's nonzero window.
std::pair<std::size_t, std::size_t> window_at(const PiecewisePoly& p, unsigned fine_level) {
  unsigned shift = fine_level - p.level();
  return {p.window_begin() << shift, p.window_end() << shift};
}

}  // namespace

PiecewisePoly::PiecewisePoly(unsigned level, std::vector<Polynomial> pieces) {
  check_level(level);
  if (pieces.size() != (std::size_t{1} << level)) throw Error("piece count must equal 2^level");
  *this = windowed(level, 0, std::move(pieces));
}

PiecewisePoly PiecewisePoly::windowed(unsigned level, std::size_t first, std::vector<Polynomial> pieces) {
  check_level(level);
  if (first + pieces.size() > (std::size_t{1} << level)) throw Error("piece window exceeds partition");
  PiecewisePoly p;
  p.level_ = level;
  auto lo = std::find_if(pieces.begin(), pieces.end(), [](const Polynomial& q) { return !q.is_zero(); });
  if (lo == pieces.end()) return p;
  auto hi = std::find_if(pieces.rbegin(), pieces.rend(), [](const Polynomial& q) { return !q.is_zero(); }).base();
  p.first_ = first + static_cast<std::size_t>(lo - pieces.begin());
  p.pieces_.assign(std::make_move_iterator(lo), std::make_move_iterator(hi));
  return p;
}

PiecewisePoly PiecewisePoly::zero(unsigned level) {
  check_level(level);
  PiecewisePoly p;
  p.level_ = level;
  return p;
}

PiecewisePoly PiecewisePoly::constant(const Rational& c) {
  return PiecewisePoly(0, {Polynomial::constant(c)});
}

std::size_t PiecewisePoly::degree() const {
  std::size_t d = 0;
  for (const auto& q : pieces_) d = std::max(d, q.degree());
  return d;
}

const Polynomial& PiecewisePoly::piece(std::size_t i) const {
  if (i < first_ || i >= first_ + pieces_.size()) return zero_polynomial();
  return pieces_[i - first_];
}

std::vector<Polynomial> PiecewisePoly::dense_pieces() const {
  std::vector<Polynomial> out(piece_count());
  std::copy(pieces_.begin(), pieces_.end(), out.begin() + static_cast<std::ptrdiff_t>(first_));
  return out;
}

bool operator==(const PiecewisePoly& p, const PiecewisePoly& q) {
  unsigned level = std::max(p.level_, q.level_);
  auto [pb, pe] = window_at(p, level);
  auto [qb, qe] = window_at(q, level);
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  // Windows are trimmed to nonzero end pieces, and refinement copies pieces,
  // so equal functions have equal windows at the common level.
  if (pb != qb || pe != qe) return false;
  for (std::size_t i = pb; i < pe; ++i) {
    if (p.piece_at(level, i) != q.piece_at(level, i)) return false;
  }
  return true;
}

Rational eval(const PiecewisePoly& p, const Rational& t) {
  Integer floor_t;
  mpz_fdiv_q(floor_t.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Rational reduced = t - floor_t;
  Integer idx;
  Rational scaled = reduced * pow2(p.level());
  mpz_fdiv_q(idx.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return p.piece(idx.get_ui())(reduced);
}

PiecewisePoly linear_combine(std::span<const std::pair<Rational, PiecewisePoly>> terms) {
  if (terms.empty()) return {};
  unsigned level = 0;
  std::size_t lo = SIZE_MAX, hi = 0;
  for (const auto& [c, p] : terms) level = std::max(level, p.level());
  for (const auto& [c, p] : terms) {
    if (p.is_zero() || sgn(c) == 0) continue;
    auto [b, e] = window_at(p, level);
    lo = std::min(lo, b);
    hi = std::max(hi, e);
  }
  if (lo >= hi) return PiecewisePoly::zero(level);
  std::vector<Polynomial> pieces(hi - lo);
  for (const auto& [c, p] : terms) {
    if (p.is_zero() || sgn(c) == 0) continue;
    for (std::size_t i = lo; i < hi; ++i) {
      const Polynomial& src = p.piece_at(level, i);
      if (!src.is_zero()) pieces[i - lo] += src * c;
    }
  }
  return PiecewisePoly::windowed(level, lo, std::move(pieces));
}

PiecewisePoly operator+(const PiecewisePoly& p, const PiecewisePoly& q) {
  const std::pair<Rational, PiecewisePoly> terms[] = {{1, p}, {1, q}};
  return linear_combine(terms);
}

PiecewisePoly operator-(const PiecewisePoly& p, const PiecewisePoly& q) {
  const std::pair<Rational, PiecewisePoly> terms[] = {{1, p}, {-1, q}};
  return linear_combine(terms);
}

PiecewisePoly operator*(const Rational& c, const PiecewisePoly& p) {
  const std::pair<Rational, PiecewisePoly> terms[] = {{c, p}};
  return linear_combine(terms);
}

PiecewisePoly operator*(const PiecewisePoly& p, const PiecewisePoly& q) {
  unsigned level = std::max(p.level(), q.level());
  auto [pb, pe] = window_at(p, level);
  auto [qb, qe] = window_at(q, level);
  std::size_t lo = std::max(pb, qb), hi = std::min(pe, qe);
  if (p.is_zero() || q.is_zero() || lo >= hi) return PiecewisePoly::zero(level);
  std::vector<Polynomial> pieces(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) pieces[i - lo] = p.piece_at(level, i) * q.piece_at(level, i);
  return PiecewisePoly::windowed(level, lo, std::move(pieces));
}

PiecewisePoly volterra(const PiecewisePoly& p) {
  const unsigned level = p.level();
  std::vector<Polynomial> out(p.piece_count());
  Rational carry = 0;  // value of the antiderivative at the left breakpoint
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rational left = breakpoint(i, level);
    Polynomial anti = p.piece(i).antiderivative();
    anti += Polynomial::constant(carry - anti(left));
    carry = anti(breakpoint(i + 1, level));
    out[i] = std::move(anti);
  }
  return PiecewisePoly(level, std::move(out));
}

PiecewisePoly derivative(const PiecewisePoly& p) {
  std::vector<Polynomial> pieces;
  pieces.reserve(p.window_end() - p.window_begin());
  for (std::size_t i = p.window_begin(); i < p.window_end(); ++i) pieces.push_back(p.piece(i).derivative());
  return PiecewisePoly::windowed(p.level(), p.window_begin(), std::move(pieces));
}

Rational inner_product(const PiecewisePoly& p, const PiecewisePoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  unsigned level = std::max(p.level(), q.level());
  auto [pb, pe] = window_at(p, level);
  auto [qb, qe] = window_at(q, level);
  Rational total = 0;
  for (std::size_t i = std::max(pb, qb); i < std::min(pe, qe); ++i) {
    const Polynomial& a = p.piece_at(level, i);
    const Polynomial& b = q.piece_at(level, i);
    if (a.is_zero() || b.is_zero()) continue;
    total += (a * b).integrate(breakpoint(i, level), breakpoint(i + 1, level));
  }
  return total;
}

Rational squared_norm(const PiecewisePoly& p) { return inner_product(p, p); }

Rational mean(const PiecewisePoly& p) {
  Rational total = 0;
  for (std::size_t i = p.window_begin(); i < p.window_end(); ++i)
    total += p.piece(i).integrate(breakpoint(i, p.level()), breakpoint(i + 1, p.level()));
  return total;
}

PiecewisePoly refine(const PiecewisePoly& p, unsigned new_level) {
  if (new_level < p.level()) throw Error("coarsening unsupported");
  check_level(new_level);
  if (new_level == p.level()) return p;
  auto [b, e] = window_at(p, new_level);
  std::vector<Polynomial> pieces;
  pieces.reserve(e - b);
  for (std::size_t i = b; i < e; ++i) pieces.push_back(p.piece_at(new_level, i));
  return PiecewisePoly::windowed(new_level, b, std::move(pieces));
}

}  // namespace spline_affine
