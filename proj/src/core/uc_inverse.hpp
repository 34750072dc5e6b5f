#pragma once

#include "core/matrix.hpp"
#include "core/scaling.hpp"

namespace uc {

/// Left unit-consistent generalized inverse:
/// pinv(diag(left_scale(a)) * a) * diag(left_scale(a)).
/// Satisfies linv(D a) = linv(a) D^-1 for nonsingular diagonal D.
Matrix linv(const Matrix& a, double tol = -1.0);

/// Right counterpart via transposition: rinv(a D) = D^-1 rinv(a).
Matrix rinv(const Matrix& a, double tol = -1.0);

/// Fully general unit-consistent inverse,
///   diag(right) * pinv(diag(left) * a * diag(right)) * diag(left)
/// with the balancing factors from dscale. Satisfies
/// uinv(D a E) = E^-1 uinv(a) D^-1 for nonsingular diagonals D, E.
/// Throws ConvergenceError if the balancing does not converge.
Matrix uinv(const Matrix& a, double tol = -1.0);

/// Same inverse assembled from a caller-supplied balancing of `a`
/// (e.g. su_closed_form); the result does not depend on which valid
/// balancing is used.
Matrix uinv_scaled(const DiagonalScaling& scaling, double tol = -1.0);

/// Mixed inverse for a square matrix whose leading `split` variables carry
/// incommensurate units while the rest live in a common Euclidean space.
/// The unit-consistent inverse handles the leading block, the Moore-Penrose
/// inverse the trailing one; split == n degenerates to uinv, split == 0 to
/// pinv.
Matrix block_uc_inverse(const Matrix& a, std::size_t split, double tol = -1.0);

}  // namespace uc
