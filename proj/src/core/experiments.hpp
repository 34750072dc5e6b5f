#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/matrix.hpp"
#include "core/rng.hpp"

namespace uc {

enum class Norm { l1, l2, linf };

std::string norm_name(Norm n);
Norm parse_norm(const std::string& name);

/// Delimited-text result table: `# key: value` metadata lines, a header
/// row, then comma-separated data rows. Rendering is deterministic so
/// identical configurations produce byte-identical reports.
struct ExperimentReport {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

/// Random map f: R^m -> R^m where output coordinate j is
/// sum_{d=1..degree} c_{j,d} * (w_{j,d} . x)^d with standard-normal
/// coefficients. No constant term, so f(0) = 0.
class PolynomialMap {
 public:
  PolynomialMap(std::size_t dim, std::size_t degree, Rng& rng);

  std::vector<double> operator()(std::span<const double> x) const;
  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::vector<double> coeffs_;      // [j][d]
  std::vector<double> directions_;  // [j][d][*]
};

inline PolynomialMap random_polynomial_map(std::size_t dim, std::size_t degree,
                                           Rng& rng) {
  return PolynomialMap(dim, degree, rng);
}

struct FitConfig {
  std::size_t m = 3;
  std::vector<std::size_t> n_values;
  int trials = 100;
  Norm norm = Norm::l1;
  std::uint64_t seed = 0;
};

struct FitRow {
  std::size_t n = 0;
  double fraction = 0.0;  // mean fraction of columns where F_R beats F_P
  int trials_used = 0;
  int failed = 0;
};

struct FitResult {
  FitConfig config;
  std::vector<FitRow> rows;
};

/// Number of sample columns whose per-vector prediction error under
/// F_R = y * rinv(x) is strictly smaller than under F_P = y * pinv(x).
/// Errors matching within 1e-12 (relative to the larger of 1 and the
/// F_P error) count as "not better".
std::size_t fit_trial_better_count(const Matrix& x, const Matrix& y,
                                   Norm norm);

FitResult fit_experiment(const FitConfig& config);
ExperimentReport render_report(const FitResult& result);

/// Smooth nonnegative test image: six random separable low-frequency modes
/// plus a little noise, affinely mapped into [0.1, 1] so every pixel is
/// comfortably above the 8-bit quantization floor.
Matrix synth_image(std::size_t rows, std::size_t cols, Rng& rng);

/// diag(row_gains) * image * diag(col_gains)
Matrix apply_gains(const Matrix& image, std::span<const double> row_gains,
                   std::span<const double> col_gains);

/// Snap to a 256-level grid after normalizing by the maximum entry (a
/// uniform intensity scaling, which both signature kinds ignore).
Matrix quantize_8bit(const Matrix& image);

struct NoiseConfig {
  std::size_t rows = 64;
  std::size_t cols = 64;
  std::size_t k = 5;          // signature length
  double scale_spread = 4.0;  // max ratio between any two row (or column) gains
  bool quantize = true;
  int trials = 100;
  std::uint64_t seed = 0;
};

struct SignatureTrial {
  double nsv_self = 0.0;   // mean distance of each image to its corruption
  double unsv_self = 0.0;
  double nsv_cross = 0.0;  // mean distance to the other images' corruptions
  double unsv_cross = 0.0;
};

struct SignatureResult {
  NoiseConfig config;
  std::vector<SignatureTrial> trials;

  double mean_nsv_self() const;
  double mean_unsv_self() const;
  double mean_nsv_cross() const;
  double mean_unsv_cross() const;
};

SignatureResult signature_experiment(const NoiseConfig& config);
ExperimentReport render_report(const SignatureResult& result);

}  // namespace uc
