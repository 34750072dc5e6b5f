#include "core/scaling.hpp"

#include <cmath>

namespace uc {

namespace {

bool all_zero(const Matrix& a) {
  for (double v : a.data())
    if (v != 0.0) return false;
  return true;
}

DiagonalScaling trivial_scaling(const Matrix& a) {
  DiagonalScaling out;
  out.left = DiagonalFactor::positive(std::vector<double>(a.rows(), 1.0));
  out.right = DiagonalFactor::positive(std::vector<double>(a.cols(), 1.0));
  out.scaled = a;
  out.converged = true;
  out.iterations = 0;
  out.residual = 0.0;
  return out;
}

}  // namespace

DiagonalFactor left_scale(const Matrix& a) {
  std::vector<double> d = row_l2_norms(a);
  for (double& v : d) v = (v > 0.0) ? 1.0 / v : 1.0;
  return DiagonalFactor::positive(std::move(d));
}

DiagonalScaling su_closed_form(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<double> row_sums(m, 0.0);
  std::vector<double> col_sums(n, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = a(i, j);
      if (v == 0.0) {
        throw Error(
            "closed-form scaling requires a matrix with no zero entries; "
            "use dscale instead");
      }
      const double l = std::log(std::abs(v));
      row_sums[i] += l;
      col_sums[j] += l;
      total += l;
    }
  }
  std::vector<double> left(m);
  std::vector<double> right(n);
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < m; ++i)
    left[i] = std::exp((total / (2.0 * md) - row_sums[i]) / nd);
  for (std::size_t j = 0; j < n; ++j)
    right[j] = std::exp((total / (2.0 * nd) - col_sums[j]) / md);

  Matrix scaled(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = left[i] * a(i, j) * right[j];

  DiagonalScaling out;
  out.left = DiagonalFactor::positive(std::move(left));
  out.right = DiagonalFactor::positive(std::move(right));
  out.scaled = std::move(scaled);
  out.converged = true;
  out.iterations = 0;
  out.residual = 0.0;
  return out;
}

DiagonalScaling dscale(const Matrix& a, double tol, int max_sweeps) {
  if (!(tol > 0.0)) throw Error("dscale tolerance must be positive");
  if (max_sweeps < 1) throw Error("dscale sweep cap must be at least 1");
  if (all_zero(a)) return trivial_scaling(a);

  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix logs(m, n);        // log magnitudes on the support, 0 elsewhere
  Matrix sign(m, n);
  std::vector<int> row_count(m, 0);
  std::vector<int> col_count(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = a(i, j);
      if (v != 0.0) {
        logs(i, j) = std::log(std::abs(v));
        sign(i, j) = (v > 0.0) ? 1.0 : -1.0;
        ++row_count[i];
        ++col_count[j];
      }
    }
  }
  std::size_t active_rows = 0;
  std::size_t active_cols = 0;
  for (int c : row_count) active_rows += (c > 0);
  for (int c : col_count) active_cols += (c > 0);

  std::vector<double> u(m, 0.0);
  std::vector<double> v(n, 0.0);
  double dx = 2.0 * tol;
  int sweeps = 0;
  while (dx > tol && sweeps < max_sweeps) {
    // Columns first, then rows.
    double col_adjust = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (col_count[j] == 0) continue;
      double sum = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        if (a(i, j) != 0.0) sum += logs(i, j);
      const double p = sum / col_count[j];
      for (std::size_t i = 0; i < m; ++i)
        if (a(i, j) != 0.0) logs(i, j) -= p;
      v[j] -= p;
      col_adjust += std::abs(p);
    }
    dx = col_adjust / static_cast<double>(active_cols);

    double row_adjust = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (row_count[i] == 0) continue;
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (a(i, j) != 0.0) sum += logs(i, j);
      const double p = sum / row_count[i];
      for (std::size_t j = 0; j < n; ++j)
        if (a(i, j) != 0.0) logs(i, j) -= p;
      u[i] -= p;
      row_adjust += std::abs(p);
    }
    dx += row_adjust / static_cast<double>(active_rows);
    ++sweeps;
  }

  std::vector<double> left(m);
  std::vector<double> right(n);
  for (std::size_t i = 0; i < m; ++i) left[i] = std::exp(u[i]);
  for (std::size_t j = 0; j < n; ++j) right[j] = std::exp(v[j]);

  Matrix scaled(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0.0) scaled(i, j) = sign(i, j) * std::exp(logs(i, j));

  DiagonalScaling out;
  out.left = DiagonalFactor::positive(std::move(left));
  out.right = DiagonalFactor::positive(std::move(right));
  out.scaled = std::move(scaled);
  out.converged = (dx <= tol);
  out.iterations = sweeps;
  out.residual = dx;
  return out;
}

SizeFunction SizeFunction::geometric() { return SizeFunction{}; }

SizeFunction SizeFunction::p_mean(double p) {
  if (!(p > 0.0)) throw Error("p_mean size function requires p > 0");
  SizeFunction s;
  s.kind = Kind::p_mean;
  s.p = p;
  return s;
}

SizeFunction SizeFunction::ab(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error("ab size function requires a > 0 and b > 0");
  }
  SizeFunction s;
  s.kind = Kind::ab;
  s.a = a;
  s.b = b;
  return s;
}

double size_value(const SizeFunction& size, std::span<const double> u) {
  std::size_t support = 0;
  for (double x : u)
    if (x != 0.0) ++support;
  if (support == 0) return 0.0;
  switch (size.kind) {
    case SizeFunction::Kind::geometric: {
      double log_sum = 0.0;
      for (double x : u)
        if (x != 0.0) log_sum += std::log(std::abs(x));
      return std::exp(log_sum / static_cast<double>(support));
    }
    case SizeFunction::Kind::p_mean: {
      double sum = 0.0;
      for (double x : u)
        if (x != 0.0) sum += std::pow(std::abs(x), size.p);
      return std::pow(sum / static_cast<double>(support), 1.0 / size.p);
    }
    case SizeFunction::Kind::ab: {
      double num = 0.0;
      double den = 0.0;
      for (double x : u) {
        if (x == 0.0) continue;
        const double ax = std::abs(x);
        num += std::pow(ax, size.a + size.b);
        den += std::pow(ax, size.a);
      }
      return std::pow(num / den, 1.0 / size.b);
    }
  }
  return 0.0;
}

DiagonalScaling generalized_sinkhorn(const Matrix& a, const SizeFunction& size,
                                     double tol, int max_sweeps) {
  if (!(tol > 0.0)) throw Error("sinkhorn tolerance must be positive");
  if (max_sweeps < 1) throw Error("sinkhorn sweep cap must be at least 1");
  if (all_zero(a)) return trivial_scaling(a);

  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  auto [mag, sign] = abs_sign_split(a);
  std::size_t active_rows = 0;
  std::size_t active_cols = 0;
  std::vector<bool> row_active(m, false);
  std::vector<bool> col_active(n, false);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mag(i, j) != 0.0) {
        row_active[i] = true;
        col_active[j] = true;
      }
  for (std::size_t i = 0; i < m; ++i) active_rows += row_active[i];
  for (std::size_t j = 0; j < n; ++j) active_cols += col_active[j];

  std::vector<double> left(m, 1.0);
  std::vector<double> right(n, 1.0);
  std::vector<double> buf;
  double dx = 2.0 * tol;
  int sweeps = 0;
  while (dx > tol && sweeps < max_sweeps) {
    double row_adjust = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!row_active[i]) continue;
      buf = mag.row_copy(i);
      const double s = size_value(size, buf);
      for (std::size_t j = 0; j < n; ++j) mag(i, j) /= s;
      left[i] /= s;
      row_adjust += std::abs(std::log(s));
    }
    dx = row_adjust / static_cast<double>(active_rows);

    double col_adjust = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!col_active[j]) continue;
      buf = mag.col_copy(j);
      const double s = size_value(size, buf);
      for (std::size_t i = 0; i < m; ++i) mag(i, j) /= s;
      right[j] /= s;
      col_adjust += std::abs(std::log(s));
    }
    dx += col_adjust / static_cast<double>(active_cols);
    ++sweeps;
  }

  Matrix scaled = hadamard(sign, mag);
  DiagonalScaling out;
  out.left = DiagonalFactor::positive(std::move(left));
  out.right = DiagonalFactor::positive(std::move(right));
  out.scaled = std::move(scaled);
  out.converged = (dx <= tol);
  out.iterations = sweeps;
  out.residual = dx;
  return out;
}

}  // namespace uc
