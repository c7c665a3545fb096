#include "drazin/chain.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "drazin/eig.hpp"
#include "drazin/factor.hpp"

namespace drazin::core {

using numkernel::mat_mul;
using numkernel::mat_power;

namespace {

// Projection onto N(s^k) along R(s^k) for k = stabilization index of s,
// built from a range basis of s^k and the complement of a range basis of
// (s^*)^k, then one linear solve.
Matrix projection_from_chain(const Matrix& s, const numkernel::PowerRankChain& chain,
                             const ToleranceConfig& tol) {
  const std::size_t n = s.rows();
  const std::size_t r = chain.ranks[chain.stabilization];
  if (r == n) return Matrix(n, n);  // invertible: projection at 0 is zero
  if (r == 0) return Matrix::identity(n);

  auto adjoint_chain = numkernel::power_rank_chain(s.conj_transpose(), tol);
  if (adjoint_chain.ranks[adjoint_chain.stabilization] != r)
    throw ChainStabilizationError(
        "spectral projection: rank of s^k and (s^*)^k disagree; tolerance breakdown");
  Matrix null_basis = numkernel::orthonormal_complement(adjoint_chain.final_range);
  const Matrix& range_basis = chain.final_range;

  // S = [K | R]; P = [K | 0] S^{-1}, via S^T P^T = [K | 0]^T.
  Matrix s_mat(n, n), b_mat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n - r; ++j) {
      s_mat.at(i, j) = null_basis.at(i, j);
      b_mat.at(i, j) = null_basis.at(i, j);
    }
    for (std::size_t j = 0; j < r; ++j) s_mat.at(i, n - r + j) = range_basis.at(i, j);
  }
  Matrix pt = numkernel::solve_linear(s_mat.transpose(), b_mat.transpose(), tol);
  return pt.transpose();
}

}  // namespace

ChainProfile chain_profile(const Matrix& a, const ToleranceConfig& tol) {
  if (!a.is_square()) throw DimensionError("chain_profile: matrix must be square");
  auto chain = numkernel::power_rank_chain(a, tol);
  if (!chain.stabilized)
    throw ChainStabilizationError(
        "chain_profile: power ranks failed to stabilize within dim steps");
  ChainProfile p;
  p.dim = a.rows();
  p.power_ranks.assign(chain.ranks.begin(),
                       chain.ranks.begin() + static_cast<long>(chain.stabilization) + 2);
  for (std::size_t r : p.power_ranks) p.nullities.push_back(p.dim - r);
  // N(a^k) = N(a^{k+1}) iff the nullities agree iff the ranks agree, so the
  // three quantities share one stabilization point.
  p.ascent = p.descent = p.index = chain.stabilization;
  if (p.index > 0) {
    bool warn = false;
    numkernel::mat_power(a, p.index, tol, &warn);
    p.conditioning_warning = warn;
  }
  return p;
}

Matrix spectral_projection(const Matrix& a, Complex lambda0, const ToleranceConfig& tol) {
  if (!a.is_square()) throw DimensionError("spectral_projection: matrix must be square");
  const std::size_t n = a.rows();
  if (n == 0) return a;

  auto clusters = numkernel::eigenvalues(a, tol);
  double nearest = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  for (const auto& c : clusters) {
    const double d = std::abs(c.value - lambda0);
    if (d < nearest) {
      second = nearest;
      nearest = d;
    } else if (d < second) {
      second = d;
    }
  }
  if (nearest <= 10.0 * tol.eig_cluster_tol && second <= 10.0 * tol.eig_cluster_tol)
    throw AmbiguousEigenvalueError(
        "spectral_projection: lambda0 lies within 10x cluster tolerance of two "
        "distinct eigenvalue clusters");
  if (nearest > tol.eig_cluster_tol) return Matrix(n, n);  // off the spectrum

  Matrix s = a - Matrix::identity(n) * lambda0;
  auto chain = numkernel::power_rank_chain(s, tol);
  if (!chain.stabilized)
    throw ChainStabilizationError("spectral_projection: rank chain failed to stabilize");
  return projection_from_chain(s, chain, tol);
}

DrazinResult drazin_inverse(const Matrix& a, const ToleranceConfig& tol) {
  if (!a.is_square()) throw DimensionError("drazin_inverse: matrix must be square");
  const std::size_t n = a.rows();
  DrazinResult res;
  if (n == 0) {
    res.inverse = res.eventual_projection = res.kernel_projection = res.core_part =
        res.nilpotent_part = a;
    return res;
  }
  ChainProfile profile = chain_profile(a, tol);
  res.index = profile.index;

  auto chain = numkernel::power_rank_chain(a, tol);
  Matrix p = projection_from_chain(a, chain, tol);
  const Matrix eye = Matrix::identity(n);
  Matrix ip = eye - p;
  // a + P is invertible by construction; a solver failure here means the
  // conditioning collapsed and surfaces as SingularMatrixError.
  res.inverse = numkernel::solve_linear(a + p, ip, tol);
  res.kernel_projection = p;
  res.eventual_projection = mat_mul(a, res.inverse);
  res.core_part = mat_mul(a, ip);
  res.nilpotent_part = mat_mul(a, p);
  DrazinPairReport rep = verify_drazin_pair(a, res.inverse, res.index, tol);
  res.residuals[0] = rep.residual_power;
  res.residuals[1] = rep.residual_inner;
  res.residuals[2] = rep.residual_commute;
  return res;
}

GroupInverseResult group_inverse(const Matrix& a, const ToleranceConfig& tol) {
  DrazinResult d = drazin_inverse(a, tol);
  if (d.index >= 2)
    throw NotGroupInvertibleError(
        "group_inverse: index " + std::to_string(d.index) + " exceeds 1", d.index);
  return GroupInverseResult{d.inverse, true};
}

std::pair<Matrix, Matrix> core_nilpotent(const Matrix& a, const ToleranceConfig& tol) {
  DrazinResult d = drazin_inverse(a, tol);
  return {d.core_part, d.nilpotent_part};
}

DrazinPairReport verify_drazin_pair(const Matrix& a, const Matrix& b, std::size_t m,
                                    const ToleranceConfig& tol) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("verify_drazin_pair: a, b must be square of equal dimension");
  DrazinPairReport rep;
  Matrix am = mat_power(a, m, tol);
  Matrix amba = mat_mul(mat_mul(am, b), a);
  Matrix bab = mat_mul(mat_mul(b, a), b);
  Matrix ab = mat_mul(a, b);
  Matrix ba = mat_mul(b, a);
  rep.residual_power = frobenius_distance(amba, am) / (1.0 + am.frobenius_norm());
  rep.residual_inner = frobenius_distance(bab, b) / (1.0 + b.frobenius_norm());
  rep.residual_commute =
      frobenius_distance(ab, ba) / (1.0 + a.frobenius_norm() * b.frobenius_norm());
  rep.pass = rep.residual_power <= tol.residual_atol &&
             rep.residual_inner <= tol.residual_atol &&
             rep.residual_commute <= tol.residual_atol;
  return rep;
}

}  // namespace drazin::core
