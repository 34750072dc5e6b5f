#pragma once

#include <cstdint>

#include "core/matrix.hpp"

namespace uc {

/// splitmix64 generator. Deterministic for a given seed; substreams for
/// independent trials are derived as seed ^ index so results do not depend
/// on scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double next_unit();

  /// Standard normal via Box-Muller (one value cached per pair).
  double next_gaussian();

  Rng substream(std::uint64_t index) const { return Rng(seed_ ^ index); }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

Matrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
/// sign of each R diagonal entry folded into the corresponding Q column.
Matrix random_orthogonal(std::size_t n, Rng& rng);

/// Nonzero diagonal with magnitudes log-uniform in [1e-3, 1e3] and random
/// signs.
DiagonalFactor random_nonsingular_diagonal(std::size_t n, Rng& rng);

}  // namespace uc
