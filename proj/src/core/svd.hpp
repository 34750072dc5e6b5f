#pragma once

#include <vector>

#include "core/matrix.hpp"

namespace uc {

/// Full decomposition a = u * diag(s) * v^T with u (m x m) and v (n x n)
/// orthogonal and s the min(m, n) singular values, sorted nonincreasing.
struct Svd {
  Matrix u;
  std::vector<double> s;
  Matrix v;
};

/// One-sided Jacobi with cyclic sweeps (cap 60). Throws ConvergenceError
/// carrying the sweep count if the rotation threshold is never met.
Svd svd(const Matrix& a);

/// Relative rank cutoff used when the caller passes tol < 0:
/// machine epsilon times max(m, n). Singular values <= tol * s_max are
/// treated as zero.
double default_rank_tolerance(std::size_t rows, std::size_t cols);

Matrix pinv(const Matrix& a, double tol = -1.0);

std::size_t rank(const Matrix& a, double tol = -1.0);

/// Reassemble u * diag(s) * v^T; mostly useful for residual checks.
Matrix svd_reconstruct(const Svd& d, std::size_t rows, std::size_t cols);

}  // namespace uc
