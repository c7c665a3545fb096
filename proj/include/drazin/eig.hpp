#pragma once

#include <vector>

#include "drazin/matrix.hpp"

namespace drazin::numkernel {

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

struct EigenCluster {
  Complex value;            // cluster representative (mean of members)
  std::size_t multiplicity; // algebraic multiplicity
};

/// All n eigenvalues of a square matrix (shifted QR on the Hessenberg form),
/// merged into clusters by single linkage under eig_cluster_tol. The
/// multiplicities sum to n; clusters are sorted by (re, im).
std::vector<EigenCluster> eigenvalues(const Matrix& a,
                                      const ToleranceConfig& tol = ToleranceConfig{});

/// Raw eigenvalue list (no clustering), unsorted multiset of size n.
std::vector<Complex> eigenvalues_raw(const Matrix& a);

/// Single-linkage clustering of an arbitrary point multiset.
std::vector<EigenCluster> cluster_points(const std::vector<Complex>& points,
                                         double cluster_tol);

}  // namespace drazin::numkernel
