// Deterministic random-case generators shared by the unit and acceptance
// suites.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/matrix.hpp"
#include "core/rng.hpp"

namespace gen {

// Shapes exercised by the consistency sweeps: all of 2x2..8x8 plus the two
// rectangular outliers.
inline std::pair<std::size_t, std::size_t> sweep_shape(std::size_t index) {
  static const std::pair<std::size_t, std::size_t> shapes[] = {
      {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}, {8, 8}, {3, 7}, {7, 3}};
  return shapes[index % (sizeof(shapes) / sizeof(shapes[0]))];
}

// Dense, sparse-zeroed, zero-row, zero-column and rank-deficient cases in
// rotation.
inline uc::Matrix sweep_matrix(std::size_t index, uc::Rng& rng) {
  const auto [m, n] = sweep_shape(index);
  const std::size_t variant = index % 5;
  uc::Matrix a = uc::random_gaussian(m, n, rng);
  switch (variant) {
    case 0:
      break;
    case 1: {  // sprinkle exact zeros over ~25% of the entries
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (rng.next_unit() < 0.25) a(i, j) = 0.0;
      break;
    }
    case 2: {  // zero out one row
      const std::size_t r = rng.next_u64() % m;
      for (std::size_t j = 0; j < n; ++j) a(r, j) = 0.0;
      break;
    }
    case 3: {  // zero out one column
      const std::size_t c = rng.next_u64() % n;
      for (std::size_t i = 0; i < m; ++i) a(i, c) = 0.0;
      break;
    }
    case 4: {  // rank deficient: product of thin factors
      const std::size_t r = std::max<std::size_t>(1, std::min(m, n) - 1);
      a = uc::random_gaussian(m, r, rng) * uc::random_gaussian(r, n, rng);
      break;
    }
  }
  return a;
}

inline uc::Matrix random_elemental_nonzero(std::size_t m, std::size_t n,
                                           uc::Rng& rng) {
  uc::Matrix a(m, n);
  for (double& v : a.data()) {
    double x = rng.next_gaussian();
    while (x == 0.0) x = rng.next_gaussian();
    v = x;
  }
  return a;
}

// Nonsingular matrix with singular values in [0.5, 2], so the true inverse
// is well defined and benign.
inline uc::Matrix random_well_conditioned(std::size_t n, uc::Rng& rng) {
  const uc::Matrix q1 = uc::random_orthogonal(n, rng);
  const uc::Matrix q2 = uc::random_orthogonal(n, rng);
  std::vector<double> s(n);
  for (double& v : s) v = 0.5 + 1.5 * rng.next_unit();
  return q1 * uc::Matrix::diagonal(s) * q2;
}

inline uc::Matrix random_singular(std::size_t n, std::size_t rank,
                                  uc::Rng& rng) {
  return uc::random_gaussian(n, rank, rng) * uc::random_gaussian(rank, n, rng);
}

}  // namespace gen
