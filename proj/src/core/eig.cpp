#include "core/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uc {

namespace {

constexpr std::size_t kMaxOrder = 64;

void hessenberg_reduce(Matrix& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += a(i, k) * a(i, k);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) continue;
    const double alpha = (a(k + 1, k) >= 0.0) ? -norm : norm;
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i <= k; ++i) v[i] = 0.0;
    v[k + 1] = a(k + 1, k) - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // A <- (I - beta v v^T) A
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += v[i] * a(i, j);
      dot *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= dot * v[i];
    }
    // A <- A (I - beta v v^T)
    for (std::size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
      dot *= beta;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= dot * v[j];
    }
  }
  // Zero out the entries below the first subdiagonal exactly.
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j) a(i, j) = 0.0;
}

double sign_with(double magnitude, double sign_of) {
  return sign_of >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

// Francis double-shift QR on an upper Hessenberg matrix, destroying it.
std::vector<std::complex<double>> hessenberg_qr(Matrix& h) {
  const int n = static_cast<int>(h.rows());
  std::vector<std::complex<double>> eig(n);
  const double eps = std::numeric_limits<double>::epsilon();

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));
  if (anorm == 0.0) anorm = 1.0;

  int nn = n - 1;
  double t = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 1; --l) {
        double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(h(l, l - 1)) <= eps * s) {
          h(l, l - 1) = 0.0;
          break;
        }
      }
      double x = h(nn, nn);
      if (l == nn) {
        eig[nn--] = x + t;
      } else {
        double y = h(nn - 1, nn - 1);
        double w = h(nn, nn - 1) * h(nn - 1, nn);
        if (l == nn - 1) {
          const double p = 0.5 * (y - x);
          const double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_with(z, p);
            eig[nn - 1] = eig[nn] = x + z;
            if (z != 0.0) eig[nn] = x - w / z;
          } else {
            eig[nn] = std::complex<double>(x + p, -z);
            eig[nn - 1] = std::conj(eig[nn]);
          }
          nn -= 2;
        } else {
          if (its == 30) {
            throw ConvergenceError("QR eigenvalue iteration did not converge",
                                   its, std::abs(h(nn, nn - 1)));
          }
          if (its == 10 || its == 20) {
            t += x;
            for (int i = 0; i <= nn; ++i) h(i, i) -= x;
            const double s =
                std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = 0;
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          for (m = nn - 2; m >= l; --m) {
            z = h(m, m);
            const double rr = x - z;
            const double ss = y - z;
            p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
            q = h(m + 1, m + 1) - z - rr - ss;
            r = h(m + 2, m + 1);
            const double scale = std::abs(p) + std::abs(q) + std::abs(r);
            p /= scale;
            q /= scale;
            r /= scale;
            if (m == l) break;
            const double u =
                std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) +
                               std::abs(h(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (int i = m; i < nn - 1; ++i) {
            h(i + 2, i) = 0.0;
            if (i != m) h(i + 2, i - 1) = 0.0;
          }
          for (int k = m; k < nn; ++k) {
            if (k != m) {
              p = h(k, k - 1);
              q = h(k + 1, k - 1);
              r = (k + 1 != nn) ? h(k + 2, k - 1) : 0.0;
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = sign_with(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) h(k, k - 1) = -h(k, k - 1);
            } else {
              h(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = h(k, j) + q * h(k + 1, j);
              if (k + 1 != nn) {
                p += r * h(k + 2, j);
                h(k + 2, j) -= p * z;
              }
              h(k + 1, j) -= p * y;
              h(k, j) -= p * x;
            }
            const int mmin = (nn < k + 3) ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              p = x * h(i, k) + y * h(i, k + 1);
              if (k + 1 != nn) {
                p += z * h(i, k + 2);
                h(i, k + 2) -= p * r;
              }
              h(i, k + 1) -= p * q;
              h(i, k) -= p;
            }
          }
        }
      }
    } while (l + 1 < nn);
  }
  return eig;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeError("eigenvalues require a square matrix");
  }
  if (a.rows() > kMaxOrder) {
    throw Error("eigenvalues limited to order 64");
  }
  if (a.rows() == 1) {
    return {std::complex<double>(a(0, 0), 0.0)};
  }
  Matrix h = a;
  hessenberg_reduce(h);
  auto eig = hessenberg_qr(h);
  std::sort(eig.begin(), eig.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              if (x.real() != y.real()) return x.real() > y.real();
              return x.imag() > y.imag();
            });
  return eig;
}

}  // namespace uc
