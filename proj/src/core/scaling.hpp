#pragma once

#include <vector>

#include "core/matrix.hpp"

namespace uc {

/// Positive left/right diagonal factors together with the scaled matrix
/// scaled = diag(left) * a * diag(right). After convergence the magnitudes
/// of the nonzero entries of every nonzero row and column of `scaled`
/// multiply to 1; zero rows and columns keep scale 1.
struct DiagonalScaling {
  DiagonalFactor left;
  DiagonalFactor right;
  Matrix scaled;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;  // last per-sweep mean absolute log adjustment
};

/// Row scale factors 1 / ||row||_2 (1 for zero rows); the product
/// diag(left_scale(a)) * a has unit-norm nonzero rows and is invariant
/// under positive row scalings of a.
DiagonalFactor left_scale(const Matrix& a);

/// Closed-form balancing for matrices with no zero entries, via elementwise
/// logs: the log-magnitude matrix is centered so every row and column sums
/// to zero, which factors exactly into a rank-1 adjustment exp(u) exp(v)^T.
/// Throws if any entry is zero (use dscale for those).
DiagonalScaling su_closed_form(const Matrix& a);

/// Iterative balancing over the nonzero mask: per sweep, subtract each
/// column's mean log magnitude, then each row's, until the summed mean
/// absolute adjustment drops to tol. Hitting the sweep cap returns
/// converged = false with the residual; it does not throw.
DiagonalScaling dscale(const Matrix& a, double tol = 1e-15,
                       int max_sweeps = 1000);

/// Vector "size" measures driving the generalized balancing iteration:
/// geometric mean of nonzero magnitudes, normalized p-norm, or the
/// two-parameter power-sum ratio. All evaluate to 1 on 0/1 vectors and are
/// homogeneous of degree 1.
struct SizeFunction {
  enum class Kind { geometric, p_mean, ab };

  static SizeFunction geometric();
  static SizeFunction p_mean(double p);
  static SizeFunction ab(double a, double b);

  Kind kind = Kind::geometric;
  double p = 0.0;
  double a = 0.0;
  double b = 0.0;
};

double size_value(const SizeFunction& size, std::span<const double> u);

/// Sinkhorn-type iteration dividing each row, then each column, by its size
/// value. With the geometric size this matches dscale's fixed point; the
/// other kinds are experimental.
DiagonalScaling generalized_sinkhorn(const Matrix& a, const SizeFunction& size,
                                     double tol = 1e-12, int max_sweeps = 1000);

}  // namespace uc
