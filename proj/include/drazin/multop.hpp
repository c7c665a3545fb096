#pragma once

#include <cstddef>
#include <string>

#include "drazin/chain.hpp"
#include "drazin/matrix.hpp"

namespace drazin::multop {

// Exceeding the default base-dimension cap for lifted computations is a hard
// error: rank chains on the n^2-dimensional lift dominate runtime.
inline constexpr std::size_t kDefaultLiftCap = 16;

struct LiftCapError : Error {
  using Error::Error;
};

struct RealizationError : Error {
  using Error::Error;
};

struct FactorizationError : Error {
  std::size_t rank_b;
  std::size_t rank_joint;
  FactorizationError(const std::string& msg, std::size_t rb, std::size_t rj)
      : Error(msg), rank_b(rb), rank_joint(rj) {}
};

enum class Side { left, right };
enum class Direction { range, nullspace };

struct MultRealization {
  Side side;
  std::size_t base_dim = 0;
  Matrix matrix;  // n^2 x n^2
};

struct FactorizationResult {
  Matrix factor;  // the C
  double residual = 0.0;
  Direction direction;
};

struct TransferIndexReport {
  std::size_t index_base = 0;
  std::size_t index_left = 0;
  std::size_t index_right = 0;
  double left_lift_residual = 0.0;   // ||(L_a)^D - L_{a^D}|| / (1+||L_{a^D}||)
  double right_lift_residual = 0.0;
  bool pass = false;
};

struct Prop7Report {
  std::size_t ascent_base = 0;
  std::size_t descent_base = 0;
  std::size_t ascent_left = 0;
  std::size_t descent_left = 0;
  std::size_t ascent_right = 0;
  std::size_t descent_right = 0;
  bool pass = false;
};

struct Theorem9Report {
  std::size_t index_base = 0;
  std::size_t ascent_left = 0;
  std::size_t ascent_right = 0;
  bool pass = false;
};

Matrix vec(const Matrix& x);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

MultRealization left_mult(const Matrix& a, const ToleranceConfig& tol = {});
MultRealization right_mult(const Matrix& a, const ToleranceConfig& tol = {});

TransferIndexReport transfer_index_check(const Matrix& a, const ToleranceConfig& tol = {},
                                         std::size_t lift_cap = kDefaultLiftCap);
Prop7Report prop7_value_check(const Matrix& t, Complex lambda, const ToleranceConfig& tol = {},
                              std::size_t lift_cap = kDefaultLiftCap);
Theorem9Report theorem9_value_check(const Matrix& t, Complex lambda,
                                    const ToleranceConfig& tol = {},
                                    std::size_t lift_cap = kDefaultLiftCap);

FactorizationResult right_factor(const Matrix& a, const Matrix& b,
                                 const ToleranceConfig& tol = {});
FactorizationResult left_factor(const Matrix& a, const Matrix& b,
                                const ToleranceConfig& tol = {});

}  // namespace drazin::multop
