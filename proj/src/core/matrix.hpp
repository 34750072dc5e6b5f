#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace uc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Raised by matrix file parsing; carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised by iterative kernels that hit their sweep cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, int iterations, double residual)
      : Error(message), iterations_(iterations), residual_(residual) {}
  int iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  int iterations_;
  double residual_;
};

/// Dense real matrix, row-major. Entries are validated to be finite when a
/// matrix is constructed from explicit data (including file input).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return {data_.data(), data_.size()}; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix& operator*=(double s);
  friend Matrix operator*(double s, Matrix m) {
    m *= s;
    return m;
  }

  std::vector<double> row_copy(std::size_t i) const;
  std::vector<double> col_copy(std::size_t j) const;

  double max_abs() const;
  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Diagonal of a square diagonal matrix. The factories enforce the two
/// variants used throughout: strictly positive entries or nonzero entries.
class DiagonalFactor {
 public:
  DiagonalFactor() = default;

  static DiagonalFactor positive(std::vector<double> entries);
  static DiagonalFactor nonsingular(std::vector<double> entries);

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }

  DiagonalFactor inverse() const;
  Matrix to_matrix() const;

 private:
  explicit DiagonalFactor(std::vector<double> entries)
      : entries_(std::move(entries)) {}
  std::vector<double> entries_;
};

Matrix hadamard(const Matrix& a, const Matrix& b);

struct AbsSignSplit {
  Matrix abs;
  Matrix sign;  // entries in {-1, 0, 1}
};
AbsSignSplit abs_sign_split(const Matrix& a);

std::vector<double> row_l2_norms(const Matrix& a);

/// diag(d) * a  and  a * diag(e)
Matrix scale_rows(const Matrix& a, std::span<const double> d);
Matrix scale_cols(const Matrix& a, std::span<const double> e);
inline Matrix scale_rows(const Matrix& a, const DiagonalFactor& d) {
  return scale_rows(a, d.entries());
}
inline Matrix scale_cols(const Matrix& a, const DiagonalFactor& e) {
  return scale_cols(a, e.entries());
}

/// Comma-delimited text, one matrix row per line, no header. Values are
/// written with 17 significant digits so a write/read round trip is exact.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix(const std::string& path);
std::string format_matrix(const Matrix& m);
void write_matrix(const Matrix& m, const std::string& path);

}  // namespace uc
