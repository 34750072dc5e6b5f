#include "core/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace uc {

namespace {

void check_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error("matrix entries must be finite");
    }
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) {
    throw ShapeError("matrix dimensions must be positive");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) {
    throw ShapeError("matrix dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw ShapeError("matrix data length does not match dimensions");
  }
  check_finite(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  if (rows_ == 0) {
    throw ShapeError("matrix dimensions must be positive");
  }
  cols_ = rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw ShapeError("matrix rows have unequal lengths");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (cols_ == 0) {
    throw ShapeError("matrix dimensions must be positive");
  }
  check_finite(data_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw ShapeError("matrix product shape mismatch");
  }
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) += aik * rhs(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (!same_shape(rhs)) throw ShapeError("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (!same_shape(rhs)) throw ShapeError("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

std::vector<double> Matrix::row_copy(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<double> Matrix::col_copy(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

DiagonalFactor DiagonalFactor::positive(std::vector<double> entries) {
  for (double v : entries) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error("diagonal factor requires strictly positive entries");
    }
  }
  return DiagonalFactor(std::move(entries));
}

DiagonalFactor DiagonalFactor::nonsingular(std::vector<double> entries) {
  for (double v : entries) {
    if (v == 0.0 || !std::isfinite(v)) {
      throw Error("diagonal factor requires nonzero entries");
    }
  }
  return DiagonalFactor(std::move(entries));
}

DiagonalFactor DiagonalFactor::inverse() const {
  std::vector<double> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0.0) throw Error("cannot invert zero diagonal entry");
    inv[i] = 1.0 / entries_[i];
  }
  return DiagonalFactor(std::move(inv));
}

Matrix DiagonalFactor::to_matrix() const { return Matrix::diagonal(entries_); }

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw ShapeError("hadamard product shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
  return out;
}

AbsSignSplit abs_sign_split(const Matrix& a) {
  Matrix abs(a.rows(), a.cols());
  Matrix sign(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double v = a(i, j);
      abs(i, j) = std::abs(v);
      sign(i, j) = (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
    }
  }
  return {std::move(abs), std::move(sign)};
}

std::vector<double> row_l2_norms(const Matrix& a) {
  std::vector<double> norms(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
    norms[i] = std::sqrt(sum);
  }
  return norms;
}

Matrix scale_rows(const Matrix& a, std::span<const double> d) {
  if (d.size() != a.rows()) throw ShapeError("row scaling length mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= d[i];
  return out;
}

Matrix scale_cols(const Matrix& a, std::span<const double> e) {
  if (e.size() != a.cols()) throw ShapeError("column scaling length mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= e[j];
  return out;
}

Matrix parse_matrix(std::string_view text) {
  std::vector<double> data;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      // A blank line is only tolerated at the end of the file.
      if (pos < text.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": empty row",
                         line_no);
      }
      continue;
    }
    std::size_t count = 0;
    std::size_t field_start = 0;
    std::string field;
    while (true) {
      std::size_t comma = line.find(',', field_start);
      field.assign(line.substr(field_start, comma == std::string_view::npos
                                                ? comma
                                                : comma - field_start));
      const char* begin = field.c_str();
      char* end = nullptr;
      double v = std::strtod(begin, &end);
      // Skip trailing blanks so "1, 2" parses; anything else is an error.
      while (end && (*end == ' ' || *end == '\t')) ++end;
      if (end == begin || *end != '\0' || !std::isfinite(v)) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": invalid number '" + field + "'",
                         line_no);
      }
      data.push_back(v);
      ++count;
      if (comma == std::string_view::npos) break;
      field_start = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(cols) + " columns, got " +
                           std::to_string(count),
                       line_no);
    }
    ++rows;
  }
  if (rows == 0) {
    throw ParseError("empty matrix file", 0);
  }
  return Matrix(rows, cols, std::move(data));
}

Matrix read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  char buf[40];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      if (j > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_matrix(const Matrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open file for writing: " + path);
  }
  out << format_matrix(m);
  if (!out) {
    throw Error("write failed: " + path);
  }
}

}  // namespace uc
