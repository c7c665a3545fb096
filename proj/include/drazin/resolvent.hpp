#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "drazin/chain.hpp"
#include "drazin/matrix.hpp"

namespace drazin::resolvent {

struct OnSpectrumError : Error {
  using Error::Error;
};

struct NotEigenvalueError : Error {
  using Error::Error;
};

struct ContourError : Error {
  using Error::Error;
};

// Raised when the truncation-by-tolerance order and the chain index of
// (a - lambda0 I) disagree; agreement is what certifies the expansion.
struct CrossCheckError : Error {
  using Error::Error;
};

struct ContourConfig {
  double radius_fraction = 0.5;  // fraction of the distance to the nearest other cluster
  std::size_t nodes = 64;        // quadrature nodes; >= 16 and a power of two
  void validate() const;
};

struct LaurentExpansion {
  Complex center;
  std::vector<Matrix> principal;  // b_1 .. b_{pole_order}
  std::size_t pole_order = 0;
  double cross_residual = 0.0;  // max distance between algebraic and contour coefficients
  ContourConfig contour;
};

struct PoleRecord {
  Complex value;
  std::size_t order = 0;
};

struct IesCertificate {
  bool empty = true;  // always, in finite dimension; the certifications are the point
  std::vector<PoleRecord> certifications;
};

struct Theorem11Report {
  std::vector<PoleRecord> poles_base;
  std::vector<PoleRecord> poles_left;
  std::vector<PoleRecord> poles_right;
  bool ies_all_empty = false;
  bool pass = false;
};

Matrix resolvent_at(const Matrix& a, Complex lambda, const ToleranceConfig& tol = {});

LaurentExpansion laurent_algebraic(const Matrix& a, Complex lambda0,
                                   const ToleranceConfig& tol = {},
                                   const ContourConfig& config = {});

Matrix laurent_contour(const Matrix& a, Complex lambda0, std::size_t n,
                       const ContourConfig& config = {}, const ToleranceConfig& tol = {});

std::vector<PoleRecord> poles(const Matrix& a, const ToleranceConfig& tol = {});

IesCertificate ies(const Matrix& a, const ToleranceConfig& tol = {});

Theorem11Report theorem11_check(const Matrix& a, const ToleranceConfig& tol = {});

}  // namespace drazin::resolvent
