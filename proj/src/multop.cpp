#include "drazin/multop.hpp"

#include <cmath>
#include <cstdint>

#include "drazin/factor.hpp"

namespace drazin::multop {
namespace {

using numkernel::kron;
using numkernel::mat_mul;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix probe_matrix(std::uint64_t& state, std::size_t n) {
  Matrix x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53 * 2.0 - 1.0;
      const double im = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53 * 2.0 - 1.0;
      x(i, j) = Complex(re, im);
    }
  return x;
}

// Certify the action invariant of a realization on 5 deterministic probes.
void certify_action(const MultRealization& r, const Matrix& a, const ToleranceConfig& tol) {
  const std::size_t n = r.base_dim;
  std::uint64_t state = 0x6d756c746f70ULL ^ (static_cast<std::uint64_t>(n) << 32);
  for (int p = 0; p < 5; ++p) {
    Matrix x = probe_matrix(state, n);
    Matrix via_lift = unvec(mat_mul(r.matrix, vec(x)), n, n);
    Matrix direct = r.side == Side::left ? mat_mul(a, x) : mat_mul(x, a);
    const double denom = 1.0 + direct.frobenius_norm();
    if (frobenius_distance(via_lift, direct) > tol.residual_atol * denom)
      throw RealizationError("multiplication-operator realization failed its action check");
  }
}

void check_lift_cap(std::size_t n, std::size_t lift_cap, const char* op) {
  if (n > lift_cap)
    throw LiftCapError(std::string(op) + ": base dimension " + std::to_string(n) +
                       " exceeds lift cap " + std::to_string(lift_cap));
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b.at(i, j);
  }
  return out;
}

}  // namespace

Matrix vec(const Matrix& x) {
  Matrix v(x.rows() * x.cols(), 1);
  std::size_t k = 0;
  for (std::size_t j = 0; j < x.cols(); ++j)
    for (std::size_t i = 0; i < x.rows(); ++i) v(k++, 0) = x.at(i, j);
  return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols)
    throw DimensionError("unvec: vector length does not match requested shape");
  Matrix x(rows, cols);
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) x(i, j) = v.at(k++, 0);
  return x;
}

MultRealization left_mult(const Matrix& a, const ToleranceConfig& tol) {
  if (!a.is_square()) throw DimensionError("left_mult: matrix must be square");
  MultRealization r{Side::left, a.rows(), kron(Matrix::identity(a.rows()), a)};
  certify_action(r, a, tol);
  return r;
}

MultRealization right_mult(const Matrix& a, const ToleranceConfig& tol) {
  if (!a.is_square()) throw DimensionError("right_mult: matrix must be square");
  // Transpose, not conjugate transpose: R_a is linear and conjugation would
  // silently change the lifted spectrum.
  MultRealization r{Side::right, a.rows(), kron(a.transpose(), Matrix::identity(a.rows()))};
  certify_action(r, a, tol);
  return r;
}

TransferIndexReport transfer_index_check(const Matrix& a, const ToleranceConfig& tol,
                                         std::size_t lift_cap) {
  if (!a.is_square()) throw DimensionError("transfer_index_check: matrix must be square");
  check_lift_cap(a.rows(), lift_cap, "transfer_index_check");

  MultRealization la = left_mult(a, tol);
  MultRealization ra = right_mult(a, tol);

  core::DrazinResult da = core::drazin_inverse(a, tol);
  core::DrazinResult dl = core::drazin_inverse(la.matrix, tol);
  core::DrazinResult dr = core::drazin_inverse(ra.matrix, tol);

  TransferIndexReport rep;
  rep.index_base = da.index;
  rep.index_left = dl.index;
  rep.index_right = dr.index;

  Matrix lift_l = left_mult(da.inverse, tol).matrix;
  Matrix lift_r = right_mult(da.inverse, tol).matrix;
  rep.left_lift_residual =
      frobenius_distance(dl.inverse, lift_l) / (1.0 + lift_l.frobenius_norm());
  rep.right_lift_residual =
      frobenius_distance(dr.inverse, lift_r) / (1.0 + lift_r.frobenius_norm());

  rep.pass = rep.index_base == rep.index_left && rep.index_base == rep.index_right &&
             rep.left_lift_residual <= 1e-8 && rep.right_lift_residual <= 1e-8;
  return rep;
}

Prop7Report prop7_value_check(const Matrix& t, Complex lambda, const ToleranceConfig& tol,
                              std::size_t lift_cap) {
  if (!t.is_square()) throw DimensionError("prop7_value_check: matrix must be square");
  check_lift_cap(t.rows(), lift_cap, "prop7_value_check");

  Matrix s = t - Matrix::identity(t.rows()) * lambda;
  auto ps = core::chain_profile(s, tol);
  auto pl = core::chain_profile(left_mult(s, tol).matrix, tol);
  auto pr = core::chain_profile(right_mult(s, tol).matrix, tol);

  Prop7Report rep;
  rep.ascent_base = ps.ascent;
  rep.descent_base = ps.descent;
  rep.ascent_left = pl.ascent;
  rep.descent_left = pl.descent;
  rep.ascent_right = pr.ascent;
  rep.descent_right = pr.descent;
  rep.pass = rep.ascent_left == rep.ascent_base && rep.descent_left == rep.descent_base &&
             rep.descent_right == rep.ascent_base && rep.ascent_right == rep.descent_base;
  return rep;
}

Theorem9Report theorem9_value_check(const Matrix& t, Complex lambda, const ToleranceConfig& tol,
                                    std::size_t lift_cap) {
  if (!t.is_square()) throw DimensionError("theorem9_value_check: matrix must be square");
  check_lift_cap(t.rows(), lift_cap, "theorem9_value_check");

  Matrix s = t - Matrix::identity(t.rows()) * lambda;
  Theorem9Report rep;
  rep.index_base = core::chain_profile(s, tol).index;
  rep.ascent_left = core::chain_profile(left_mult(s, tol).matrix, tol).ascent;
  rep.ascent_right = core::chain_profile(right_mult(s, tol).matrix, tol).ascent;
  rep.pass = rep.index_base == std::max(rep.ascent_left, rep.ascent_right);
  return rep;
}

FactorizationResult right_factor(const Matrix& a, const Matrix& b, const ToleranceConfig& tol) {
  if (a.rows() != b.rows())
    throw DimensionError("right_factor: a and b must have the same row dimension");
  const std::size_t rank_b = numkernel::rank(b, tol);
  const std::size_t rank_joint = numkernel::rank(hconcat(b, a), tol);
  if (rank_joint != rank_b)
    throw FactorizationError("right_factor: range of a is not contained in range of b",
                             rank_b, rank_joint);
  FactorizationResult res;
  res.direction = Direction::range;
  res.factor = mat_mul(numkernel::pseudoinverse(b, tol), a);
  res.residual =
      frobenius_distance(a, mat_mul(b, res.factor)) / (1.0 + a.frobenius_norm());
  return res;
}

FactorizationResult left_factor(const Matrix& a, const Matrix& b, const ToleranceConfig& tol) {
  if (a.cols() != b.cols())
    throw DimensionError("left_factor: a and b must have the same column dimension");
  const std::size_t rank_b = numkernel::rank(b, tol);
  const std::size_t rank_joint = numkernel::rank(vconcat(b, a), tol);
  if (rank_joint != rank_b)
    throw FactorizationError("left_factor: null space of b is not contained in null space of a",
                             rank_b, rank_joint);
  FactorizationResult res;
  res.direction = Direction::nullspace;
  res.factor = mat_mul(a, numkernel::pseudoinverse(b, tol));
  res.residual =
      frobenius_distance(a, mat_mul(res.factor, b)) / (1.0 + a.frobenius_norm());
  return res;
}

}  // namespace drazin::multop
