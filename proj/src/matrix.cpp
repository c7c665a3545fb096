#include "drazin/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drazin {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionError("Matrix: entry count " + std::to_string(data_.size()) +
                         " does not match shape " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  check_finite();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Complex>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix Matrix::jordan(std::size_t n, Complex lambda) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = lambda;
    if (i + 1 < n) m.at(i, i + 1) = 1.0;
  }
  return m;
}

void Matrix::check_finite() const {
  for (const Complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NonFiniteError("Matrix: non-finite entry");
}

Matrix Matrix::conj_transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (!same_shape(other)) throw DimensionError("Matrix add: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + other.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (!same_shape(other)) throw DimensionError("Matrix sub: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - other.data_[i];
  return m;
}

Matrix Matrix::operator*(Complex s) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
  return m;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw DimensionError("frobenius_distance: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a.at(i, j) - b.at(i, j));
  return std::sqrt(s);
}

namespace numkernel {

namespace {
// Below this row count the OpenMP fork/join overhead dominates.
constexpr std::size_t kParallelThreshold = 64;
}  // namespace

namespace serial {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a.at(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          c.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
    }
  return c;
}

}  // namespace serial

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " differ");
  if (a.rows() < kParallelThreshold) return serial::mat_mul(a, b);
  Matrix c(a.rows(), b.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(a.rows()); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a.at(static_cast<std::size_t>(i), k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(static_cast<std::size_t>(i), j) += aik * b.at(k, j);
    }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t out_rows = a.rows() * b.rows();
  if (out_rows < kParallelThreshold) return serial::kron(a, b);
  Matrix c(out_rows, a.cols() * b.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(out_rows); ++r) {
    const std::size_t i = static_cast<std::size_t>(r) / b.rows();
    const std::size_t p = static_cast<std::size_t>(r) % b.rows();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a.at(i, j);
      for (std::size_t q = 0; q < b.cols(); ++q)
        c.at(static_cast<std::size_t>(r), j * b.cols() + q) = aij * b.at(p, q);
    }
  }
  return c;
}

Matrix mat_power(const Matrix& a, std::size_t k, const ToleranceConfig& tol,
                 bool* conditioning_warning) {
  if (!a.is_square()) throw DimensionError("mat_power: matrix must be square");
  if (conditioning_warning) *conditioning_warning = false;
  Matrix p = Matrix::identity(a.rows());
  const double base_norm = a.frobenius_norm();
  double norm_estimate = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    p = mat_mul(p, a);
    norm_estimate *= std::max(base_norm, 1e-300);
    if (conditioning_warning && p.frobenius_norm() > norm_estimate / tol.rank_rtol)
      *conditioning_warning = true;
  }
  return p;
}

}  // namespace numkernel

}  // namespace drazin
