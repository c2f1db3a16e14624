#pragma once

#include <cstddef>
#include <vector>

namespace spline_affine {

/// Dense symmetric matrix of doubles, row-major.
struct SymmetricMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  explicit SymmetricMatrix(std::size_t size = 0) : n(size), data(size * size, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

struct EigenResult {
  std::vector<double> eigenvalues;  ///< ascending
  double offdiag_residual = 0.0;    ///< Frobenius norm of the off-diagonal part
  int sweeps = 0;
};

/// Frobenius norm of the strictly off-diagonal part.
double offdiag_norm(const SymmetricMatrix& a);

/// Cyclic Jacobi diagonalisation: sweeps of plane rotations over all (p, q)
/// pairs, in round-robin order, until the off-diagonal Frobenius norm drops below tol. Throws
/// spline_affine::Error carrying the best residual after max_sweeps.
EigenResult jacobi_eigenvalues(SymmetricMatrix a, double tol = 1e-12, int max_sweeps = 100);

}  // namespace spline_affine
