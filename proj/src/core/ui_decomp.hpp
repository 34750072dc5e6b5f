#pragma once

#include <complex>
#include <vector>

#include "core/matrix.hpp"
#include "core/scaling.hpp"
#include "core/svd.hpp"

namespace uc {

/// Five-factor decomposition a = diag(d) * u * diag(s) * v^T * diag(e),
/// where d and e invert the balancing factors and u, s, v are the SVD of
/// the balanced matrix. The values in s are invariant under nonsingular
/// diagonal scalings of a.
struct UiSvd {
  DiagonalFactor d;
  Matrix u;
  std::vector<double> s;
  Matrix v;
  DiagonalFactor e;
};

UiSvd ui_svd(const Matrix& a);

/// Singular values of the balanced matrix, sorted nonincreasing.
std::vector<double> ui_singular_values(const Matrix& a);

/// Left-sided variant: a = diag(d) * u * diag(s) * v^T with d inverting the
/// row-norm scaling. The values in s are invariant under nonsingular left
/// diagonal and right orthogonal transformations.
struct LeftUiSvd {
  DiagonalFactor d;
  Matrix u;
  std::vector<double> s;
  Matrix v;
};

LeftUiSvd left_ui_svd(const Matrix& a);

/// Eigenvalues of the balanced matrix; invariant under transformations
/// D a E with D * E nonnegative real (e.g. positive scalings and diagonal
/// similarities).
std::vector<std::complex<double>> si_eigenvalues(const Matrix& a);

/// Unit-norm nonnegative vector of the k leading (UI) singular values,
/// zero-padded when the matrix has fewer; all-zero for a zero matrix.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool is_zero() const;

 private:
  std::vector<double> values_;
};

Signature nsv_signature(const Matrix& a, std::size_t k);
Signature unsv_signature(const Matrix& a, std::size_t k);

/// (1/pi) * angle between vectors, in [0, 1]; 0.5 for orthogonal
/// nonnegative vectors. Throws on a zero operand.
double angular_distance(std::span<const double> p, std::span<const double> q);
double angular_distance(const Signature& p, const Signature& q);

/// a (hadamard) uinv(a)^T: a unit-invariant matrix-valued signature that,
/// unlike the singular values, is not permutation invariant.
Matrix hadamard_signature(const Matrix& a, double tol = -1.0);

}  // namespace uc
