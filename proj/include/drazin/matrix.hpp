#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace drazin {

using Complex = std::complex<double>;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

class NonFiniteError : public Error {
 public:
  explicit NonFiniteError(const std::string& what) : Error(what) {}
};

/// Raised by the linear solver when a pivot falls below tolerance.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, double pivot)
      : Error(what), pivot_magnitude(pivot) {}
  double pivot_magnitude;
};

/// Tolerance policy shared by every numeric operation.
struct ToleranceConfig {
  double rank_rtol = 1e-10;      // relative threshold for rank decisions
  double residual_atol = 1e-8;   // absolute pass threshold for residuals
  double eig_cluster_tol = 1e-8; // eigenvalues closer than this are merged

  void validate() const {
    if (!(rank_rtol > 0.0 && rank_rtol < 1.0))
      throw Error("ToleranceConfig: rank_rtol must lie in (0, 1)");
    if (!(residual_atol > 0.0))
      throw Error("ToleranceConfig: residual_atol must be positive");
    if (!(eig_cluster_tol > 0.0))
      throw Error("ToleranceConfig: eig_cluster_tol must be positive");
  }
};

/// Dense complex matrix, row-major storage. Values are immutable in spirit:
/// every operation returns a fresh matrix and never aliases its inputs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const std::vector<Complex>& d);
  /// Jordan block J_n(lambda).
  static Matrix jordan(std::size_t n, Complex lambda);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Complex& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  const std::vector<Complex>& data() const { return data_; }

  /// Throws NonFiniteError if any entry has a NaN/Inf component.
  void check_finite() const;

  Matrix conj_transpose() const;
  Matrix transpose() const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(Complex s) const;

  double frobenius_norm() const;
  double max_abs() const;

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// ‖a − b‖_F; shapes must match.
double frobenius_distance(const Matrix& a, const Matrix& b);

namespace numkernel {

/// Standard complex matrix product, OpenMP-parallel above a size threshold.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Kronecker product, shape (a.rows*b.rows) x (a.cols*b.cols).
Matrix kron(const Matrix& a, const Matrix& b);

/// a^k with a^0 = I. Sets *conditioning_warning (if given) when the norm of
/// the accumulated power exceeds (1/rank_rtol) times the ‖a‖^k estimate.
Matrix mat_power(const Matrix& a, std::size_t k,
                 const ToleranceConfig& tol = ToleranceConfig{},
                 bool* conditioning_warning = nullptr);

namespace serial {
// Reference kernels: plain triple loops, no OpenMP. Kept for testing and for
// the kernel benchmark.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
}  // namespace serial

}  // namespace numkernel

}  // namespace drazin
