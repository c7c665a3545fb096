#include "drazin/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "drazin/eig.hpp"
#include "drazin/factor.hpp"
#include "drazin/multop.hpp"

namespace drazin::resolvent {
namespace {

using numkernel::mat_mul;

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Distance from lambda0 to the nearest cluster and to the nearest *other*
// cluster (infinity when absent).
struct ClusterDistances {
  double nearest = std::numeric_limits<double>::infinity();
  double nearest_other = std::numeric_limits<double>::infinity();
};

ClusterDistances cluster_distances(const std::vector<numkernel::EigenCluster>& clusters,
                                   Complex lambda0, const ToleranceConfig& tol) {
  ClusterDistances d;
  for (const auto& c : clusters) {
    const double dist = std::abs(c.value - lambda0);
    d.nearest = std::min(d.nearest, dist);
    if (dist > tol.eig_cluster_tol) d.nearest_other = std::min(d.nearest_other, dist);
  }
  return d;
}

double contour_radius(const std::vector<numkernel::EigenCluster>& clusters, Complex lambda0,
                      const ContourConfig& config, const ToleranceConfig& tol) {
  auto d = cluster_distances(clusters, lambda0, tol);
  if (!std::isinf(d.nearest_other) && d.nearest_other < 100.0 * tol.eig_cluster_tol)
    throw ContourError(
        "laurent_contour: nearest distinct eigenvalue cluster is too close for a safe "
        "contour; reduce the radius fraction or refine the spectrum");
  // With a single cluster the resolvent is analytic on the whole punctured
  // plane, so any radius works; pick a unit-scale one.
  const double base = std::isinf(d.nearest_other) ? 1.0 : d.nearest_other;
  const double r = config.radius_fraction * base;
  for (const auto& c : clusters) {
    if (std::abs(std::abs(c.value - lambda0) - r) < 10.0 * tol.eig_cluster_tol)
      throw ContourError("laurent_contour: contour circle passes too close to an "
                         "eigenvalue; use a smaller radius fraction");
  }
  return r;
}

std::vector<PoleRecord> sorted_poles(std::vector<PoleRecord> p) {
  std::sort(p.begin(), p.end(), [](const PoleRecord& x, const PoleRecord& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return p;
}

}  // namespace

void ContourConfig::validate() const {
  if (!(radius_fraction > 0.0 && radius_fraction < 1.0))
    throw ContourError("ContourConfig: radius fraction must lie strictly between 0 and 1");
  if (nodes < 16 || !power_of_two(nodes))
    throw ContourError("ContourConfig: node count must be a power of two, at least 16");
}

Matrix resolvent_at(const Matrix& a, Complex lambda, const ToleranceConfig& tol) {
  if (!a.is_square()) throw DimensionError("resolvent_at: matrix must be square");
  auto clusters = numkernel::eigenvalues(a, tol);
  for (const auto& c : clusters)
    if (std::abs(c.value - lambda) <= tol.eig_cluster_tol)
      throw OnSpectrumError("resolvent_at: evaluation point lies on the spectrum");
  const std::size_t n = a.rows();
  return numkernel::solve_linear(Matrix::identity(n) * lambda - a, Matrix::identity(n), tol);
}

Matrix laurent_contour(const Matrix& a, Complex lambda0, std::size_t n,
                       const ContourConfig& config, const ToleranceConfig& tol) {
  if (!a.is_square()) throw DimensionError("laurent_contour: matrix must be square");
  if (n == 0) throw Error("laurent_contour: coefficient index must be positive");
  config.validate();

  auto clusters = numkernel::eigenvalues(a, tol);
  const double r = contour_radius(clusters, lambda0, config, tol);
  const std::size_t dim = a.rows();
  const Matrix eye = Matrix::identity(dim);

  // b_n = (1/2*pi*i) * contour integral of (lambda-lambda0)^{n-1} R(lambda, a);
  // on the circle lambda = lambda0 + r e^{i theta} the trapezoid rule gives
  // (r^n / N) * sum_k e^{i n theta_k} R(lambda_k). Summation order is fixed so
  // results are bit-reproducible for a given config.
  Matrix acc(dim, dim);
  const std::size_t big_n = config.nodes;
  for (std::size_t k = 0; k < big_n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(big_n);
    const Complex on_circle = lambda0 + Complex(r * std::cos(theta), r * std::sin(theta));
    Matrix res = numkernel::solve_linear(eye * on_circle - a, eye, tol);
    const Complex weight = std::polar(1.0, static_cast<double>(n) * theta);
    acc = acc + res * weight;
  }
  const double scale = std::pow(r, static_cast<double>(n)) / static_cast<double>(big_n);
  return acc * Complex(scale, 0.0);
}

LaurentExpansion laurent_algebraic(const Matrix& a, Complex lambda0, const ToleranceConfig& tol,
                                   const ContourConfig& config) {
  if (!a.is_square()) throw DimensionError("laurent_algebraic: matrix must be square");
  config.validate();

  auto clusters = numkernel::eigenvalues(a, tol);
  auto d = cluster_distances(clusters, lambda0, tol);
  if (d.nearest > tol.eig_cluster_tol)
    throw NotEigenvalueError(
        "laurent_algebraic: expansion center does not match any eigenvalue cluster");

  Matrix b1 = core::spectral_projection(a, lambda0, tol);
  const std::size_t n = a.rows();
  Matrix shifted = a - Matrix::identity(n) * lambda0;
  const std::size_t index = core::chain_profile(shifted, tol).index;

  LaurentExpansion exp;
  exp.center = lambda0;
  exp.contour = config;

  // b_{k+1} = (a - lambda0)^k b_1; truncate at the first vanishing coefficient.
  std::vector<Matrix> coeffs;
  coeffs.push_back(b1);
  const double scale = 1.0 + a.frobenius_norm();
  std::size_t order = 0;
  Matrix cur = b1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (coeffs.back().frobenius_norm() > tol.residual_atol * scale) {
      order = coeffs.size();
      cur = mat_mul(shifted, coeffs.back());
      coeffs.push_back(cur);
    } else {
      break;
    }
  }
  if (order != index)
    throw CrossCheckError("laurent_algebraic: truncation order " + std::to_string(order) +
                          " disagrees with the chain index " + std::to_string(index));

  exp.pole_order = order;
  exp.principal.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(order));

  // Cross-validate against the contour route for b_1 .. b_{order+1}.
  for (std::size_t k = 1; k <= order + 1; ++k) {
    Matrix contour = laurent_contour(a, lambda0, k, config, tol);
    const Matrix& alg = k <= order ? exp.principal[k - 1] : coeffs[order];
    const double dist = frobenius_distance(contour, alg);
    exp.cross_residual = std::max(exp.cross_residual, dist);
  }
  return exp;
}

std::vector<PoleRecord> poles(const Matrix& a, const ToleranceConfig& tol) {
  if (!a.is_square()) throw DimensionError("poles: matrix must be square");
  std::vector<PoleRecord> out;
  for (const auto& c : numkernel::eigenvalues(a, tol)) {
    Matrix shifted = a - Matrix::identity(a.rows()) * c.value;
    out.push_back({c.value, core::chain_profile(shifted, tol).index});
  }
  return sorted_poles(std::move(out));
}

IesCertificate ies(const Matrix& a, const ToleranceConfig& tol) {
  IesCertificate cert;
  cert.certifications = poles(a, tol);
  for (const auto& p : cert.certifications)
    cert.empty = cert.empty && p.order > 0 && p.order <= a.rows();
  return cert;
}

Theorem11Report theorem11_check(const Matrix& a, const ToleranceConfig& tol) {
  Theorem11Report rep;
  rep.poles_base = poles(a, tol);
  rep.poles_left = poles(multop::left_mult(a, tol).matrix, tol);
  rep.poles_right = poles(multop::right_mult(a, tol).matrix, tol);
  rep.ies_all_empty = ies(a, tol).empty &&
                      ies(multop::left_mult(a, tol).matrix, tol).empty &&
                      ies(multop::right_mult(a, tol).matrix, tol).empty;

  auto match = [&](const std::vector<PoleRecord>& x, const std::vector<PoleRecord>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::abs(x[i].value - y[i].value) > tol.eig_cluster_tol) return false;
      if (x[i].order != y[i].order) return false;
    }
    return true;
  };
  rep.pass = match(rep.poles_base, rep.poles_left) &&
             match(rep.poles_base, rep.poles_right) && rep.ies_all_empty;
  return rep;
}

}  // namespace drazin::resolvent
