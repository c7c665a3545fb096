#pragma once

#include <vector>

#include "drazin/matrix.hpp"

namespace drazin::numkernel {

/// Householder QR with column pivoting of an n x m matrix: A*P = Q*R with
/// |R(0,0)| >= |R(1,1)| >= ... Column t of A*P is column perm[t] of A.
struct ColPivQR {
  Matrix q;                      // n x n unitary
  Matrix r;                      // n x m upper triangular
  std::vector<std::size_t> perm; // column permutation
  /// Number of diagonal values exceeding rank_rtol * |R(0,0)|.
  std::size_t rank(double rank_rtol) const;
};

ColPivQR col_piv_qr(const Matrix& a);

/// Rank with the single relative-threshold policy; the zero matrix has rank 0.
std::size_t rank(const Matrix& a, const ToleranceConfig& tol = ToleranceConfig{});

/// Solves a X = b by LU with partial pivoting; a square.
/// Throws SingularMatrixError (carrying the pivot magnitude) when a pivot
/// falls below rank_rtol times the largest entry of a.
Matrix solve_linear(const Matrix& a, const Matrix& b,
                    const ToleranceConfig& tol = ToleranceConfig{});

/// Moore-Penrose pseudoinverse via column-pivoted QR followed by a second
/// (complete orthogonal) factorization step. Zero maps to the zero matrix of
/// transposed shape.
Matrix pseudoinverse(const Matrix& a, const ToleranceConfig& tol = ToleranceConfig{});

/// Orthonormal basis of the range of a, as an a.rows() x rank matrix.
Matrix orthonormal_range(const Matrix& a, const ToleranceConfig& tol = ToleranceConfig{});

/// Orthonormal basis of the orthogonal complement of the span of the columns
/// of basis (which must be orthonormal), as an n x (n - r) matrix.
Matrix orthonormal_complement(const Matrix& basis);

/// Ranks of successive powers a^0, a^1, ... computed by propagating an
/// orthonormal range basis (never forms high powers explicitly, so rank
/// decisions face only one factor of cond(a) per step). Stops one step after
/// the first stabilization rank(a^k) == rank(a^{k+1}), capped at dim + 1
/// entries past the cap. Optionally returns the final range basis.
struct PowerRankChain {
  std::vector<std::size_t> ranks;  // ranks[k] = rank(a^k); ranks[0] = dim
  std::size_t stabilization;       // first k with ranks[k] == ranks[k+1]
  Matrix final_range;              // orthonormal basis of R(a^stabilization)
  bool stabilized = true;          // false only if the cap was hit (broken tolerances)
};

PowerRankChain power_rank_chain(const Matrix& a,
                                const ToleranceConfig& tol = ToleranceConfig{});

}  // namespace drazin::numkernel
