#include "core/ui_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/eig.hpp"
#include "core/uc_inverse.hpp"

namespace uc {

namespace {

DiagonalScaling balanced(const Matrix& a) {
  DiagonalScaling scaling = dscale(a);
  if (!scaling.converged) {
    throw ConvergenceError("diagonal balancing did not converge",
                           scaling.iterations, scaling.residual);
  }
  return scaling;
}

}  // namespace

UiSvd ui_svd(const Matrix& a) {
  DiagonalScaling scaling = balanced(a);
  Svd d = svd(scaling.scaled);
  UiSvd out;
  out.d = scaling.left.inverse();
  out.u = std::move(d.u);
  out.s = std::move(d.s);
  out.v = std::move(d.v);
  out.e = scaling.right.inverse();
  return out;
}

std::vector<double> ui_singular_values(const Matrix& a) {
  return svd(balanced(a).scaled).s;
}

LeftUiSvd left_ui_svd(const Matrix& a) {
  const DiagonalFactor d = left_scale(a);
  Svd dec = svd(scale_rows(a, d));
  LeftUiSvd out;
  out.d = d.inverse();
  out.u = std::move(dec.u);
  out.s = std::move(dec.s);
  out.v = std::move(dec.v);
  return out;
}

std::vector<std::complex<double>> si_eigenvalues(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeError("scale-invariant eigenvalues require a square matrix");
  }
  return eigenvalues(balanced(a).scaled);
}

Signature::Signature(std::vector<double> values) : values_(std::move(values)) {
  double norm2 = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (v < 0.0) throw Error("signature entries must be nonnegative");
    if (i > 0 && v > values_[i - 1]) {
      throw Error("signature entries must be sorted nonincreasing");
    }
    norm2 += v * v;
  }
  if (norm2 != 0.0 && std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
    throw Error("signature must have unit norm (or be all zero)");
  }
}

bool Signature::is_zero() const {
  for (double v : values_)
    if (v != 0.0) return false;
  return true;
}

namespace {

Signature make_signature(std::vector<double> s, std::size_t k) {
  if (k == 0) throw Error("signature length must be positive");
  s.resize(k, 0.0);  // zero-pad or truncate to the k leading values
  double norm2 = 0.0;
  for (double v : s) norm2 += v * v;
  if (norm2 > 0.0) {
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : s) v *= inv;
  }
  return Signature(std::move(s));
}

}  // namespace

Signature nsv_signature(const Matrix& a, std::size_t k) {
  return make_signature(svd(a).s, k);
}

Signature unsv_signature(const Matrix& a, std::size_t k) {
  return make_signature(ui_singular_values(a), k);
}

double angular_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw ShapeError("angular distance requires equal vector lengths");
  }
  double np2 = 0.0;
  double nq2 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    np2 += p[i] * p[i];
    nq2 += q[i] * q[i];
  }
  if (np2 == 0.0 || nq2 == 0.0) {
    throw Error("angular distance is undefined for a zero vector");
  }
  // Equivalent to acos of the (clamped) normalized dot product, but exact
  // for identical arguments and accurate at small angles.
  const double np = std::sqrt(np2);
  const double nq = std::sqrt(nq2);
  double diff2 = 0.0;
  double sum2 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] * nq - q[i] * np;
    const double s = p[i] * nq + q[i] * np;
    diff2 += d * d;
    sum2 += s * s;
  }
  const double angle = 2.0 * std::atan2(std::sqrt(diff2), std::sqrt(sum2));
  return angle / std::numbers::pi;
}

double angular_distance(const Signature& p, const Signature& q) {
  return angular_distance(std::span<const double>(p.values()),
                          std::span<const double>(q.values()));
}

Matrix hadamard_signature(const Matrix& a, double tol) {
  return hadamard(a, uinv(a, tol).transpose());
}

}  // namespace uc
