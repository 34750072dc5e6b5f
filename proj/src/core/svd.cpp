#include "core/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace uc {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kRotationTol = 1e-15;

double col_dot(const Matrix& g, std::size_t j, std::size_t k) {
  double sum = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i) sum += g(i, j) * g(i, k);
  return sum;
}

// A = G V^T with the columns of G orthogonal on exit; rotations accumulate
// into V. Requires rows >= cols. The rotation threshold cannot go below the
// rounding floor of an m-term dot product, so it is clamped at m*eps.
void one_sided_jacobi(Matrix& g, Matrix& v) {
  const std::size_t n = g.cols();
  v = Matrix::identity(n);
  const double eps = std::numeric_limits<double>::epsilon();
  const double tol =
      std::max(kRotationTol, 4.0 * static_cast<double>(g.rows()) * eps);
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    // Columns annihilated by earlier rotations decay into rounding noise
    // that stays correlated with the dominant columns; flush them to an
    // exact zero (their singular value is below any rank cutoff) so the
    // sweep can settle.
    double max_norm2 = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      max_norm2 = std::max(max_norm2, col_dot(g, j, j));
    const double drop2 = 16.0 * eps * eps * max_norm2;
    for (std::size_t j = 0; j < n; ++j) {
      if (col_dot(g, j, j) > drop2) continue;
      for (std::size_t i = 0; i < g.rows(); ++i) g(i, j) = 0.0;
    }
    bool rotated = false;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double alpha = col_dot(g, j, j);
        const double beta = col_dot(g, k, k);
        const double gamma = col_dot(g, j, k);
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= tol * std::sqrt(alpha) * std::sqrt(beta))
          continue;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < g.rows(); ++i) {
          const double gj = g(i, j);
          const double gk = g(i, k);
          g(i, j) = c * gj - s * gk;
          g(i, k) = s * gj + c * gk;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vj = v(i, j);
          const double vk = v(i, k);
          v(i, j) = c * vj - s * vk;
          v(i, k) = s * vj + c * vk;
        }
        rotated = true;
      }
    }
    if (!rotated) return;
  }
  throw ConvergenceError("one-sided Jacobi SVD did not converge", kMaxSweeps,
                         0.0);
}

// Orthonormalize the columns of u in place (two Gram-Schmidt passes per
// column). Columns that collapse (the ones backing near-zero singular
// values) are replaced by the canonical vector with the largest residual
// against the columns accepted so far; healthy columns only move at
// rounding level.
void orthonormalize_columns(Matrix& u) {
  const std::size_t m = u.rows();
  auto project_out = [&](std::size_t j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < j; ++p) {
        double dot = 0.0;
        for (std::size_t i = 0; i < m; ++i) dot += u(i, p) * u(i, j);
        for (std::size_t i = 0; i < m; ++i) u(i, j) -= dot * u(i, p);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm2 += u(i, j) * u(i, j);
    return std::sqrt(norm2);
  };
  for (std::size_t j = 0; j < m; ++j) {
    double norm = project_out(j);
    if (norm < 1e-8) {
      // Residual norm of e_k against the accepted columns is
      // 1 - sum of squared projections; some k has residual^2 >= (m-j)/m.
      std::size_t best = 0;
      double best_residual = -1.0;
      for (std::size_t k = 0; k < m; ++k) {
        double proj2 = 0.0;
        for (std::size_t p = 0; p < j; ++p) proj2 += u(k, p) * u(k, p);
        const double residual = 1.0 - proj2;
        if (residual > best_residual) {
          best_residual = residual;
          best = k;
        }
      }
      for (std::size_t i = 0; i < m; ++i) u(i, j) = 0.0;
      u(best, j) = 1.0;
      norm = project_out(j);
    }
    for (std::size_t i = 0; i < m; ++i) u(i, j) /= norm;
  }
}

// Rotated copy of a tall matrix with sorted column norms; g's columns are
// s[j] times the left singular vectors, v holds the right ones.
struct JacobiFactor {
  Matrix g;
  Matrix v;
  std::vector<double> s;
};

JacobiFactor jacobi_factor(const Matrix& a_tall) {
  const std::size_t m = a_tall.rows();
  const std::size_t n = a_tall.cols();
  Matrix g = a_tall;
  Matrix v;
  one_sided_jacobi(g, v);

  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += g(i, j) * g(i, j);
    s[j] = std::sqrt(sum);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return s[x] > s[y]; });

  Matrix g_sorted(m, n);
  Matrix v_sorted(n, n);
  std::vector<double> s_sorted(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    s_sorted[j] = s[src];
    for (std::size_t i = 0; i < m; ++i) g_sorted(i, j) = g(i, src);
    for (std::size_t i = 0; i < n; ++i) v_sorted(i, j) = v(i, src);
  }
  return {std::move(g_sorted), std::move(v_sorted), std::move(s_sorted)};
}

}  // namespace

Svd svd(const Matrix& a) {
  if (a.rows() < a.cols()) {
    Svd t = svd(a.transpose());
    return {std::move(t.v), std::move(t.s), std::move(t.u)};
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  JacobiFactor f = jacobi_factor(a);
  Matrix u(m, m);
  for (std::size_t j = 0; j < n; ++j) {
    if (f.s[j] > 0.0) {
      for (std::size_t i = 0; i < m; ++i) u(i, j) = f.g(i, j) / f.s[j];
    }
  }
  orthonormalize_columns(u);
  return {std::move(u), std::move(f.s), std::move(f.v)};
}

double default_rank_tolerance(std::size_t rows, std::size_t cols) {
  return std::numeric_limits<double>::epsilon() *
         static_cast<double>(std::max(rows, cols));
}

Matrix pinv(const Matrix& a, double tol) {
  if (tol < 0.0) tol = default_rank_tolerance(a.rows(), a.cols());
  // The full orthogonal basis is never needed here, so work with the thin
  // factorization of whichever orientation is tall.
  const bool tall = a.rows() >= a.cols();
  const JacobiFactor f = jacobi_factor(tall ? a : a.transpose());
  const double smax = f.s.empty() ? 0.0 : f.s[0];
  const double cutoff = tol * smax;
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < f.s.size(); ++r) {
    if (!(f.s[r] > cutoff)) break;  // s is sorted nonincreasing
    const double inv2 = 1.0 / (f.s[r] * f.s[r]);
    // Left singular vector scaled by s lives in g's column r; fold the
    // extra factor of s into the inverse.
    if (tall) {
      for (std::size_t i = 0; i < a.cols(); ++i) {
        const double vir = f.v(i, r) * inv2;
        if (vir == 0.0) continue;
        for (std::size_t j = 0; j < a.rows(); ++j) {
          out(i, j) += vir * f.g(j, r);
        }
      }
    } else {
      for (std::size_t i = 0; i < a.cols(); ++i) {
        const double uir = f.g(i, r) * inv2;
        if (uir == 0.0) continue;
        for (std::size_t j = 0; j < a.rows(); ++j) {
          out(i, j) += uir * f.v(j, r);
        }
      }
    }
  }
  return out;
}

std::size_t rank(const Matrix& a, double tol) {
  if (tol < 0.0) tol = default_rank_tolerance(a.rows(), a.cols());
  const JacobiFactor f =
      jacobi_factor(a.rows() >= a.cols() ? a : a.transpose());
  const double smax = f.s.empty() ? 0.0 : f.s[0];
  const double cutoff = tol * smax;
  std::size_t r = 0;
  for (double sv : f.s) {
    if (sv > cutoff && sv > 0.0) ++r;
  }
  return r;
}

Matrix svd_reconstruct(const Svd& d, std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < d.s.size(); ++r) {
    if (d.s[r] == 0.0) continue;
    for (std::size_t i = 0; i < rows; ++i) {
      const double uis = d.u(i, r) * d.s[r];
      for (std::size_t j = 0; j < cols; ++j) {
        out(i, j) += uis * d.v(j, r);
      }
    }
  }
  return out;
}

}  // namespace uc
