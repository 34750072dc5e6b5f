#pragma once

#include <complex>
#include <vector>

#include "core/matrix.hpp"

namespace uc {

/// Eigenvalues of a small (n <= 64) square real matrix, computed by
/// Householder reduction to Hessenberg form followed by the shifted QR
/// iteration. Complex eigenvalues come out in conjugate pairs. The result
/// is sorted by descending real part, then descending imaginary part.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

}  // namespace uc
