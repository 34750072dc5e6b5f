#include "core/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "core/svd.hpp"
#include "core/uc_inverse.hpp"
#include "core/ui_decomp.hpp"

namespace uc {

std::string norm_name(Norm n) {
  switch (n) {
    case Norm::l1: return "l1";
    case Norm::l2: return "l2";
    case Norm::linf: return "linf";
  }
  return "l1";
}

Norm parse_norm(const std::string& name) {
  if (name == "l1") return Norm::l1;
  if (name == "l2") return Norm::l2;
  if (name == "linf") return Norm::linf;
  throw Error("unknown norm '" + name + "' (expected l1, l2 or linf)");
}

std::string ExperimentReport::to_csv() const {
  std::string out;
  for (const auto& [key, value] : metadata) {
    out += "# " + key + ": " + value + "\n";
  }
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j > 0) out += ',';
    out += header[j];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += row[j];
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double vector_norm(std::span<const double> v, Norm norm) {
  double acc = 0.0;
  switch (norm) {
    case Norm::l1:
      for (double x : v) acc += std::abs(x);
      return acc;
    case Norm::l2:
      for (double x : v) acc += x * x;
      return std::sqrt(acc);
    case Norm::linf:
      for (double x : v) acc = std::max(acc, std::abs(x));
      return acc;
  }
  return acc;
}

}  // namespace

PolynomialMap::PolynomialMap(std::size_t dim, std::size_t degree, Rng& rng)
    : dim_(dim), degree_(degree) {
  if (dim == 0 || degree == 0) {
    throw Error("polynomial map requires positive dimension and degree");
  }
  coeffs_.resize(dim * degree);
  directions_.resize(dim * degree * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t d = 0; d < degree; ++d) {
      coeffs_[j * degree + d] = rng.next_gaussian();
      for (std::size_t i = 0; i < dim; ++i) {
        directions_[(j * degree + d) * dim + i] = rng.next_gaussian();
      }
    }
  }
}

std::vector<double> PolynomialMap::operator()(std::span<const double> x) const {
  if (x.size() != dim_) throw ShapeError("polynomial map input size mismatch");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t j = 0; j < dim_; ++j) {
    double acc = 0.0;
    for (std::size_t d = 0; d < degree_; ++d) {
      const double* w = &directions_[(j * degree_ + d) * dim_];
      double dot = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) dot += w[i] * x[i];
      double power = dot;
      for (std::size_t e = 1; e <= d; ++e) power *= dot;  // dot^(d+1)
      acc += coeffs_[j * degree_ + d] * power;
    }
    y[j] = acc;
  }
  return y;
}

std::size_t fit_trial_better_count(const Matrix& x, const Matrix& y,
                                   Norm norm) {
  const Matrix f_p = y * pinv(x);
  const Matrix f_r = y * rinv(x);
  const Matrix res_p = f_p * x - y;
  const Matrix res_r = f_r * x - y;
  std::size_t better = 0;
  std::vector<double> col_p(y.rows());
  std::vector<double> col_r(y.rows());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (std::size_t i = 0; i < y.rows(); ++i) {
      col_p[i] = res_p(i, j);
      col_r[i] = res_r(i, j);
    }
    const double ep = vector_norm(col_p, norm);
    const double er = vector_norm(col_r, norm);
    // Ties count as "not better".
    if (std::abs(er - ep) <= 1e-12 * std::max(1.0, ep)) continue;
    if (er < ep) ++better;
  }
  return better;
}

FitResult fit_experiment(const FitConfig& config) {
  if (config.m < 1 || config.trials < 1 || config.n_values.empty()) {
    throw Error("invalid fit experiment configuration");
  }
  for (std::size_t n : config.n_values) {
    if (n < config.m) {
      throw Error("each sample count must be at least the dimension m");
    }
  }
  FitResult result;
  result.config = config;
  Rng base(config.seed);
  std::vector<double> xi(config.m);
  for (std::size_t n : config.n_values) {
    double fraction_sum = 0.0;
    int used = 0;
    int failed = 0;
    for (int trial = 0; trial < config.trials; ++trial) {
      Rng rng = base.substream(static_cast<std::uint64_t>(trial));
      const PolynomialMap f(config.m, config.m, rng);
      const Matrix x = random_gaussian(config.m, n, rng);
      Matrix y(config.m, n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < config.m; ++i) xi[i] = x(i, j);
        const std::vector<double> yi = f(xi);
        for (std::size_t i = 0; i < config.m; ++i) y(i, j) = yi[i];
      }
      try {
        const std::size_t better = fit_trial_better_count(x, y, config.norm);
        fraction_sum += static_cast<double>(better) / static_cast<double>(n);
        ++used;
      } catch (const Error&) {
        ++failed;
      }
    }
    FitRow row;
    row.n = n;
    row.fraction = (used > 0) ? fraction_sum / used : 0.0;
    row.trials_used = used;
    row.failed = failed;
    result.rows.push_back(row);
  }
  return result;
}

ExperimentReport render_report(const FitResult& result) {
  ExperimentReport report;
  report.metadata.emplace_back("experiment", "fit");
  report.metadata.emplace_back("seed", std::to_string(result.config.seed));
  report.metadata.emplace_back("requested_trials",
                               std::to_string(result.config.trials));
  int failed_total = 0;
  for (const FitRow& row : result.rows) failed_total += row.failed;
  if (failed_total > 0) {
    report.metadata.emplace_back("failed_trials",
                                 std::to_string(failed_total));
  }
  report.header = {"n", "fraction", "trials", "norm", "m"};
  for (const FitRow& row : result.rows) {
    report.rows.push_back({std::to_string(row.n), fmt(row.fraction),
                           std::to_string(row.trials_used),
                           norm_name(result.config.norm),
                           std::to_string(result.config.m)});
  }
  return report;
}

Matrix synth_image(std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows < 8 || cols < 8) {
    throw Error("synthetic images must be at least 8x8");
  }
  constexpr int kModes = 6;
  Matrix img(rows, cols);
  std::vector<double> u(rows);
  std::vector<double> v(cols);
  for (int mode = 0; mode < kModes; ++mode) {
    const double amp = 0.5 + rng.next_unit();
    const double fu = 1.0 + static_cast<double>(rng.next_u64() % 4);
    const double fv = 1.0 + static_cast<double>(rng.next_u64() % 4);
    const double pu = 2.0 * std::numbers::pi * rng.next_unit();
    const double pv = 2.0 * std::numbers::pi * rng.next_unit();
    for (std::size_t i = 0; i < rows; ++i) {
      u[i] = 1.0 + std::sin(2.0 * std::numbers::pi * fu *
                                static_cast<double>(i) / rows +
                            pu);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      v[j] = 1.0 + std::sin(2.0 * std::numbers::pi * fv *
                                static_cast<double>(j) / cols +
                            pv);
    }
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) img(i, j) += amp * u[i] * v[j];
  }
  for (double& x : img.data()) x += 0.05 * rng.next_unit();

  double lo = img(0, 0);
  double hi = img(0, 0);
  for (double x : img.data()) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const double span = hi - lo;
  for (double& x : img.data()) {
    const double unit = (span > 0.0) ? (x - lo) / span : 0.0;
    x = 0.1 + 0.9 * unit;
  }
  return img;
}

Matrix apply_gains(const Matrix& image, std::span<const double> row_gains,
                   std::span<const double> col_gains) {
  return scale_cols(scale_rows(image, row_gains), col_gains);
}

Matrix quantize_8bit(const Matrix& image) {
  double hi = 0.0;
  for (double x : image.data()) hi = std::max(hi, std::abs(x));
  if (hi == 0.0) return image;
  Matrix out = image;
  for (double& x : out.data()) {
    double unit = x / hi;
    unit = std::min(std::max(unit, 0.0), 1.0);
    x = std::round(255.0 * unit) / 255.0;
  }
  return out;
}

double SignatureResult::mean_nsv_self() const {
  double s = 0.0;
  for (const auto& t : trials) s += t.nsv_self;
  return trials.empty() ? 0.0 : s / trials.size();
}

double SignatureResult::mean_unsv_self() const {
  double s = 0.0;
  for (const auto& t : trials) s += t.unsv_self;
  return trials.empty() ? 0.0 : s / trials.size();
}

double SignatureResult::mean_nsv_cross() const {
  double s = 0.0;
  for (const auto& t : trials) s += t.nsv_cross;
  return trials.empty() ? 0.0 : s / trials.size();
}

double SignatureResult::mean_unsv_cross() const {
  double s = 0.0;
  for (const auto& t : trials) s += t.unsv_cross;
  return trials.empty() ? 0.0 : s / trials.size();
}

SignatureResult signature_experiment(const NoiseConfig& config) {
  if (config.rows < 8 || config.cols < 8 || config.k < 1 ||
      config.trials < 1 || !(config.scale_spread >= 1.0)) {
    throw Error("invalid signature experiment configuration");
  }
  constexpr int kImages = 3;
  SignatureResult result;
  result.config = config;
  const double half_log_spread = 0.5 * std::log(config.scale_spread);
  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng = Rng(config.seed).substream(static_cast<std::uint64_t>(trial));
    std::vector<Matrix> images;
    images.reserve(kImages);
    for (int i = 0; i < kImages; ++i) {
      images.push_back(synth_image(config.rows, config.cols, rng));
    }
    // One shared gain profile, as if every image went through the same
    // scanner.
    std::vector<double> row_gains(config.rows);
    std::vector<double> col_gains(config.cols);
    for (double& g : row_gains) {
      g = std::exp(half_log_spread * (2.0 * rng.next_unit() - 1.0));
    }
    for (double& g : col_gains) {
      g = std::exp(half_log_spread * (2.0 * rng.next_unit() - 1.0));
    }
    std::vector<Matrix> corrupted;
    corrupted.reserve(kImages);
    for (const Matrix& img : images) {
      Matrix c = apply_gains(img, row_gains, col_gains);
      if (config.quantize) c = quantize_8bit(c);
      corrupted.push_back(std::move(c));
    }
    std::vector<Signature> nsv_orig, nsv_corr, unsv_orig, unsv_corr;
    for (int i = 0; i < kImages; ++i) {
      nsv_orig.push_back(nsv_signature(images[i], config.k));
      nsv_corr.push_back(nsv_signature(corrupted[i], config.k));
      unsv_orig.push_back(unsv_signature(images[i], config.k));
      unsv_corr.push_back(unsv_signature(corrupted[i], config.k));
    }
    SignatureTrial stats;
    int cross_pairs = 0;
    for (int i = 0; i < kImages; ++i) {
      stats.nsv_self += angular_distance(nsv_orig[i], nsv_corr[i]);
      stats.unsv_self += angular_distance(unsv_orig[i], unsv_corr[i]);
      for (int j = 0; j < kImages; ++j) {
        if (j == i) continue;
        stats.nsv_cross += angular_distance(nsv_orig[i], nsv_corr[j]);
        stats.unsv_cross += angular_distance(unsv_orig[i], unsv_corr[j]);
        ++cross_pairs;
      }
    }
    stats.nsv_self /= kImages;
    stats.unsv_self /= kImages;
    stats.nsv_cross /= cross_pairs;
    stats.unsv_cross /= cross_pairs;
    result.trials.push_back(stats);
  }
  return result;
}

ExperimentReport render_report(const SignatureResult& result) {
  ExperimentReport report;
  const NoiseConfig& cfg = result.config;
  report.metadata.emplace_back("experiment", "signature");
  report.metadata.emplace_back("seed", std::to_string(cfg.seed));
  report.metadata.emplace_back(
      "image_size", std::to_string(cfg.rows) + "x" + std::to_string(cfg.cols));
  report.metadata.emplace_back("k", std::to_string(cfg.k));
  report.metadata.emplace_back("scale_spread", fmt(cfg.scale_spread));
  report.metadata.emplace_back("quantize", cfg.quantize ? "true" : "false");
  report.metadata.emplace_back("mean_nsv_self", fmt(result.mean_nsv_self()));
  report.metadata.emplace_back("mean_unsv_self", fmt(result.mean_unsv_self()));
  report.metadata.emplace_back("mean_nsv_cross", fmt(result.mean_nsv_cross()));
  report.metadata.emplace_back("mean_unsv_cross",
                               fmt(result.mean_unsv_cross()));
  report.header = {"trial", "nsv_self", "unsv_self", "nsv_cross", "unsv_cross"};
  for (std::size_t t = 0; t < result.trials.size(); ++t) {
    const SignatureTrial& s = result.trials[t];
    report.rows.push_back({std::to_string(t), fmt(s.nsv_self),
                           fmt(s.unsv_self), fmt(s.nsv_cross),
                           fmt(s.unsv_cross)});
  }
  return report;
}

}  // namespace uc
