#include "drazin/eig.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "drazin/hash.hpp"

namespace drazin::numkernel {

namespace {

// Householder reduction to upper Hessenberg form (similarity).
Matrix to_hessenberg(Matrix h) {
  const std::size_t n = h.rows();
  for (std::size_t t = 0; t + 2 < n; ++t) {
    std::vector<Complex> v(n - t - 1);
    for (std::size_t i = t + 1; i < n; ++i) v[i - t - 1] = h.at(i, t);
    double norm2 = 0.0;
    for (const Complex& z : v) norm2 += std::norm(z);
    if (norm2 == 0.0) continue;
    const double norm = std::sqrt(norm2);
    Complex phase = v[0] == Complex(0.0, 0.0) ? Complex(1.0, 0.0) : v[0] / std::abs(v[0]);
    v[0] += phase * norm;
    double vnorm2 = 0.0;
    for (const Complex& z : v) vnorm2 += std::norm(z);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // Left: rows t+1..n-1.
    for (std::size_t j = 0; j < n; ++j) {
      Complex s(0.0, 0.0);
      for (std::size_t i = t + 1; i < n; ++i) s += std::conj(v[i - t - 1]) * h.at(i, j);
      s *= beta;
      for (std::size_t i = t + 1; i < n; ++i) h.at(i, j) -= s * v[i - t - 1];
    }
    // Right: columns t+1..n-1.
    for (std::size_t i = 0; i < n; ++i) {
      Complex s(0.0, 0.0);
      for (std::size_t j = t + 1; j < n; ++j) s += h.at(i, j) * v[j - t - 1];
      s *= beta;
      for (std::size_t j = t + 1; j < n; ++j) h.at(i, j) -= s * std::conj(v[j - t - 1]);
    }
    for (std::size_t i = t + 2; i < n; ++i) h.at(i, t) = 0.0;
  }
  return h;
}

// Eigenvalue of the trailing 2x2 of the active block closest to its (hi,hi)
// entry (Wilkinson shift).
Complex wilkinson_shift(const Matrix& h, std::size_t hi) {
  const Complex a = h.at(hi - 1, hi - 1), b = h.at(hi - 1, hi);
  const Complex c = h.at(hi, hi - 1), d = h.at(hi, hi);
  const Complex tr = a + d;
  const Complex det = a * d - b * c;
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  const Complex l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

// One explicit single-shift QR step on the Hessenberg block [lo, hi] using
// Givens rotations: H - sI = QR, H <- RQ + sI.
void qr_step(Matrix& h, std::size_t lo, std::size_t hi, Complex shift) {
  const std::size_t len = hi - lo + 1;
  std::vector<Complex> cs(len - 1), sn(len - 1);
  for (std::size_t i = lo; i <= hi; ++i) h.at(i, i) -= shift;
  for (std::size_t k = lo; k < hi; ++k) {
    const Complex x = h.at(k, k), y = h.at(k + 1, k);
    const double r = std::sqrt(std::norm(x) + std::norm(y));
    Complex c(1.0, 0.0), s(0.0, 0.0);
    if (r > 0.0) {
      c = x / r;
      s = y / r;
    }
    cs[k - lo] = c;
    sn[k - lo] = s;
    for (std::size_t j = k; j <= hi; ++j) {
      const Complex t1 = h.at(k, j), t2 = h.at(k + 1, j);
      h.at(k, j) = std::conj(c) * t1 + std::conj(s) * t2;
      h.at(k + 1, j) = -s * t1 + c * t2;
    }
  }
  for (std::size_t k = lo; k < hi; ++k) {
    const Complex c = cs[k - lo], s = sn[k - lo];
    const std::size_t top = lo;
    for (std::size_t i = top; i <= std::min(k + 1, hi); ++i) {
      const Complex t1 = h.at(i, k), t2 = h.at(i, k + 1);
      h.at(i, k) = t1 * c + t2 * s;
      h.at(i, k + 1) = -t1 * std::conj(s) + t2 * std::conj(c);
    }
  }
  for (std::size_t i = lo; i <= hi; ++i) h.at(i, i) += shift;
}

}  // namespace

std::vector<Complex> eigenvalues_raw(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("eigenvalues: matrix must be square");
  const std::size_t n = a.rows();
  std::vector<Complex> eigs;
  if (n == 0) return eigs;
  Matrix h = to_hessenberg(a);
  const double eps = 2.0 * std::numeric_limits<double>::epsilon();
  std::size_t hi = n - 1;
  std::size_t iter = 0;
  const std::size_t max_iter = 40 * n + 100;
  std::size_t stagnation = 0;
  while (true) {
    // Deflate negligible subdiagonals.
    for (std::size_t k = 0; k < hi; ++k) {
      const double bound = eps * (std::abs(h.at(k, k)) + std::abs(h.at(k + 1, k + 1)));
      if (std::abs(h.at(k + 1, k)) <= std::max(bound, 1e-300)) h.at(k + 1, k) = 0.0;
    }
    while (hi > 0 && h.at(hi, hi - 1) == Complex(0.0, 0.0)) {
      eigs.push_back(h.at(hi, hi));
      --hi;
      stagnation = 0;
    }
    if (hi == 0) {
      eigs.push_back(h.at(0, 0));
      break;
    }
    std::size_t lo = hi;
    while (lo > 0 && h.at(lo, lo - 1) != Complex(0.0, 0.0)) --lo;
    if (++iter > max_iter)
      throw ConvergenceError("eigenvalues: QR iteration did not converge, matrix " +
                             canonical_hash(a));
    Complex shift = wilkinson_shift(h, hi);
    if (++stagnation % 12 == 0) {
      // Exceptional ad-hoc shift to break symmetric stalls.
      shift = h.at(hi, hi) + Complex(std::abs(h.at(hi, hi - 1)), 0.0) * 1.5;
    }
    qr_step(h, lo, hi, shift);
  }
  return eigs;
}

std::vector<EigenCluster> cluster_points(const std::vector<Complex>& points,
                                         double cluster_tol) {
  const std::size_t n = points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(points[i] - points[j]) <= cluster_tol) parent[find(i)] = find(j);
  std::vector<EigenCluster> clusters;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(clusters.size());
      clusters.push_back({Complex(0.0, 0.0), 0});
    }
    EigenCluster& c = clusters[static_cast<std::size_t>(slot[root])];
    c.value += points[i];
    c.multiplicity += 1;
  }
  for (EigenCluster& c : clusters) c.value /= static_cast<double>(c.multiplicity);
  std::sort(clusters.begin(), clusters.end(), [](const EigenCluster& a, const EigenCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return clusters;
}

std::vector<EigenCluster> eigenvalues(const Matrix& a, const ToleranceConfig& tol) {
  return cluster_points(eigenvalues_raw(a), tol.eig_cluster_tol);
}

}  // namespace drazin::numkernel
