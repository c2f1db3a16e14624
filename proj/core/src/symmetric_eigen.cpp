#include "spline_affine/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spline_affine/exact.hpp"

namespace spline_affine {

double offdiag_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

namespace {

struct Rotation {
  std::size_t p, q;
  double c, s;
};

// Round-robin pairing: over n - 1 rounds (n even) every pair meets once.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tournament(std::size_t n) {
  const std::size_t m = n + (n & 1U);
  std::vector<std::size_t> seat(m);
  for (std::size_t i = 0; i < m; ++i) seat[i] = i;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
  for (std::size_t r = 0; r + 1 < m; ++r) {
    auto& round = rounds.emplace_back();
    for (std::size_t i = 0; i < m / 2; ++i) {
      const std::size_t a = seat[i], b = seat[m - 1 - i];
      if (a < n && b < n) round.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::rotate(seat.begin() + 1, seat.end() - 1, seat.end());
  }
  return rounds;
}

}  // namespace

EigenResult jacobi_eigenvalues(SymmetricMatrix a, double tol, int max_sweeps) {
  const std::size_t n = a.n;
  EigenResult res;
  res.offdiag_residual = offdiag_norm(a);
  const auto rounds = tournament(n);
  std::vector<Rotation> rot;

  while (res.offdiag_residual >= tol) {
    if (res.sweeps == max_sweeps) {
      std::ostringstream msg;
      msg << "eigensolver did not converge in " << max_sweeps << " sweeps (residual " << res.offdiag_residual
          << ")";
      throw Error(msg.str());
    }
    for (const auto& round : rounds) {
      // Disjoint pairs commute, so one round is A <- J^T A J with J a
      // product of independent plane rotations.
      rot.clear();
      for (const auto& [p, q] : round) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        rot.push_back({p, q, c, t * c});
      }
      if (rot.empty()) continue;
      for (const auto& r : rot) {
        double* rp = &a.data[r.p * n];
        double* rq = &a.data[r.q * n];
        for (std::size_t k = 0; k < n; ++k) {
          const double x = rp[k], y = rq[k];
          rp[k] = r.c * x - r.s * y;
          rq[k] = r.s * x + r.c * y;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        double* row = &a.data[i * n];
        for (const auto& r : rot) {
          const double x = row[r.p], y = row[r.q];
          row[r.p] = r.c * x - r.s * y;
          row[r.q] = r.s * x + r.c * y;
        }
      }
      for (const auto& r : rot) a(r.p, r.q) = a(r.q, r.p) = 0.0;
    }
    ++res.sweeps;
    res.offdiag_residual = offdiag_norm(a);
  }

  res.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.eigenvalues[i] = a(i, i);
  std::sort(res.eigenvalues.begin(), res.eigenvalues.end());
  return res;
}

}  // namespace spline_affine
