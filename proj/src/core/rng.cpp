#include "core/rng.hpp"

#include <cmath>
#include <numbers>

namespace uc {

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double Rng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - next_unit();  // (0, 1], keeps log finite
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

Matrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (double& v : m.data()) v = rng.next_gaussian();
  return m;
}

namespace {

// Householder QR returning Q explicitly; R diagonal left in `rdiag`.
Matrix householder_q(Matrix a, std::vector<double>& rdiag) {
  const std::size_t n = a.rows();
  Matrix q = Matrix::identity(n);
  std::vector<std::vector<double>> vs;
  std::vector<double> betas;
  for (std::size_t k = 0; k < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) norm2 += a(i, k) * a(i, k);
    const double norm = std::sqrt(norm2);
    double beta = 0.0;
    std::vector<double> vk(n, 0.0);
    if (norm > 0.0) {
      const double alpha = (a(k, k) >= 0.0) ? -norm : norm;
      vk[k] = a(k, k) - alpha;
      for (std::size_t i = k + 1; i < n; ++i) vk[i] = a(i, k);
      double vnorm2 = 0.0;
      for (std::size_t i = k; i < n; ++i) vnorm2 += vk[i] * vk[i];
      if (vnorm2 > 0.0) {
        beta = 2.0 / vnorm2;
        // Apply (I - beta v v^T) from the left to the trailing block.
        for (std::size_t j = k; j < n; ++j) {
          double dot = 0.0;
          for (std::size_t i = k; i < n; ++i) dot += vk[i] * a(i, j);
          dot *= beta;
          for (std::size_t i = k; i < n; ++i) a(i, j) -= dot * vk[i];
        }
      }
    }
    vs.push_back(std::move(vk));
    betas.push_back(beta);
  }
  rdiag.resize(n);
  for (std::size_t k = 0; k < n; ++k) rdiag[k] = a(k, k);
  // Accumulate Q = H_0 H_1 ... H_{n-1} by applying reflectors in reverse.
  for (std::size_t kk = n; kk-- > 0;) {
    const double beta = betas[kk];
    if (beta == 0.0) continue;
    const auto& vk = vs[kk];
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = kk; i < n; ++i) dot += vk[i] * q(i, j);
      dot *= beta;
      for (std::size_t i = kk; i < n; ++i) q(i, j) -= dot * vk[i];
    }
  }
  return q;
}

}  // namespace

Matrix random_orthogonal(std::size_t n, Rng& rng) {
  Matrix g = random_gaussian(n, n, rng);
  std::vector<double> rdiag;
  Matrix q = householder_q(std::move(g), rdiag);
  for (std::size_t j = 0; j < n; ++j) {
    if (rdiag[j] < 0.0) {
      for (std::size_t i = 0; i < n; ++i) q(i, j) = -q(i, j);
    }
  }
  return q;
}

DiagonalFactor random_nonsingular_diagonal(std::size_t n, Rng& rng) {
  std::vector<double> entries(n);
  const double lo = std::log(1e-3);
  const double hi = std::log(1e3);
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::exp(lo + (hi - lo) * rng.next_unit());
    const bool negative = (rng.next_u64() & 1u) != 0;
    entries[i] = negative ? -mag : mag;
  }
  return DiagonalFactor::nonsingular(std::move(entries));
}

}  // namespace uc
