#pragma once

#include <vector>

#include "drazin/matrix.hpp"

namespace drazin::core {

/// Ranks and nullities of successive powers with the derived ascent, descent
/// and index. In finite dimension the three integers always coincide.
struct ChainProfile {
  std::size_t dim = 0;
  std::vector<std::size_t> power_ranks;  // r_k = rank(a^k), r_0 = dim
  std::vector<std::size_t> nullities;    // dim - r_k
  std::size_t ascent = 0;
  std::size_t descent = 0;
  std::size_t index = 0;
  bool conditioning_warning = false;
};

struct DrazinResult {
  Matrix inverse;              // a^D
  std::size_t index = 0;
  Matrix eventual_projection;  // a a^D
  Matrix kernel_projection;    // P = I - a a^D, spectral projection at 0
  Matrix core_part;            // a (I - P)
  Matrix nilpotent_part;       // a P
  double residuals[3] = {0, 0, 0};  // the three defining equations
};

struct GroupInverseResult {
  Matrix inverse;  // a^#
  bool certified = false;
};

struct DrazinPairReport {
  double residual_power;    // ‖a^m b a - a^m‖ / (1 + ‖a^m‖)
  double residual_inner;    // ‖b a b - b‖ / (1 + ‖b‖)
  double residual_commute;  // ‖a b - b a‖ / (1 + ‖a‖·‖b‖)
  bool pass = false;
};

class NotGroupInvertibleError : public Error {
 public:
  NotGroupInvertibleError(const std::string& what, std::size_t index)
      : Error(what), index(index) {}
  std::size_t index;
};

/// Raised when lambda0 sits between two eigenvalue clusters so the projection
/// target is ambiguous.
class AmbiguousEigenvalueError : public Error {
 public:
  explicit AmbiguousEigenvalueError(const std::string& what) : Error(what) {}
};

class ChainStabilizationError : public Error {
 public:
  explicit ChainStabilizationError(const std::string& what) : Error(what) {}
};

ChainProfile chain_profile(const Matrix& a, const ToleranceConfig& tol = ToleranceConfig{});

/// Projection onto N((a - l0)^k) along R((a - l0)^k), k = index(a - l0).
/// Zero matrix when lambda0 is off the spectrum.
Matrix spectral_projection(const Matrix& a, Complex lambda0,
                           const ToleranceConfig& tol = ToleranceConfig{});

DrazinResult drazin_inverse(const Matrix& a, const ToleranceConfig& tol = ToleranceConfig{});

GroupInverseResult group_inverse(const Matrix& a, const ToleranceConfig& tol = ToleranceConfig{});

/// (core, nilpotent) with core = a(I-P), nilpotent = aP, P the spectral
/// projection at 0.
std::pair<Matrix, Matrix> core_nilpotent(const Matrix& a,
                                         const ToleranceConfig& tol = ToleranceConfig{});

DrazinPairReport verify_drazin_pair(const Matrix& a, const Matrix& b, std::size_t m,
                                    const ToleranceConfig& tol = ToleranceConfig{});

}  // namespace drazin::core
