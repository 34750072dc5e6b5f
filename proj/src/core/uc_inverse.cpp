#include "core/uc_inverse.hpp"

#include <cmath>
#include <limits>

#include "core/svd.hpp"

namespace uc {

Matrix linv(const Matrix& a, double tol) {
  const DiagonalFactor d = left_scale(a);
  return scale_cols(pinv(scale_rows(a, d), tol), d);
}

Matrix rinv(const Matrix& a, double tol) {
  return linv(a.transpose(), tol).transpose();
}

Matrix uinv_scaled(const DiagonalScaling& scaling, double tol) {
  return scale_rows(scale_cols(pinv(scaling.scaled, tol), scaling.left),
                    scaling.right);
}

Matrix uinv(const Matrix& a, double tol) {
  DiagonalScaling scaling = dscale(a);
  if (!scaling.converged) {
    throw ConvergenceError("diagonal balancing did not converge",
                           scaling.iterations, scaling.residual);
  }
  return uinv_scaled(scaling, tol);
}

namespace {

Matrix block_of(const Matrix& a, std::size_t r0, std::size_t r1,
                std::size_t c0, std::size_t c1) {
  Matrix out(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = a(i, j);
  return out;
}

void place_block(Matrix& dst, const Matrix& src, std::size_t r0,
                 std::size_t c0) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      dst(r0 + i, c0 + j) = src(i, j);
}

}  // namespace

Matrix block_uc_inverse(const Matrix& a, std::size_t split, double tol) {
  if (a.rows() != a.cols()) {
    throw ShapeError("block inverse requires a square matrix");
  }
  const std::size_t n = a.rows();
  if (split > n) {
    throw Error("block split exceeds matrix order");
  }
  if (split == n) return uinv(a, tol);
  if (split == 0) return pinv(a, tol);

  // The Schur-complement blocks are formed from matrix products, so their
  // rank-decision noise floor sits near eps * cond, not eps. Absent a
  // caller-supplied cutoff, use sqrt(eps) for the inner inverses.
  if (tol < 0.0) tol = std::sqrt(std::numeric_limits<double>::epsilon());

  const Matrix w = block_of(a, 0, split, 0, split);
  const Matrix x = block_of(a, 0, split, split, n);
  const Matrix y = block_of(a, split, n, 0, split);
  const Matrix z = block_of(a, split, n, split, n);

  const Matrix z_pinv = pinv(z, tol);
  const Matrix w_uinv = uinv(w, tol);
  const Matrix schur_w = uinv(w - x * z_pinv * y, tol);
  const Matrix schur_z = pinv(z - y * w_uinv * x, tol);

  Matrix out(n, n);
  place_block(out, schur_w, 0, 0);
  place_block(out, -1.0 * (w_uinv * x * schur_z), 0, split);
  place_block(out, -1.0 * (z_pinv * y * schur_w), split, 0);
  place_block(out, schur_z, split, split);
  return out;
}

}  // namespace uc
