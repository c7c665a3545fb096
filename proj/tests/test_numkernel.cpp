#include "doctest.h"

#include <algorithm>

#include "drazin/eig.hpp"
#include "drazin/factor.hpp"
#include "drazin/matrix.hpp"
#include "test_util.hpp"

using namespace drazin;
using namespace drazin::numkernel;

namespace {
const ToleranceConfig kTol{};

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  return Matrix(2, 2, {a, b, c, d});
}
}  // namespace

TEST_CASE("mat_mul basics") {
  testutil::Rng rng(11);
  Matrix x = rng.matrix(2, 2);
  CHECK(frobenius_distance(mat_mul(Matrix::identity(2), x), x) == doctest::Approx(0.0));

  Matrix j = Matrix::jordan(2, 0.0);
  CHECK(mat_mul(j, j).frobenius_norm() == doctest::Approx(0.0));

  Matrix a = mat2(0, 1, 0, 0), b = mat2(0, 0, 1, 0);
  Matrix expect = mat2(1, 0, 0, 0);
  CHECK(frobenius_distance(mat_mul(a, b), expect) == doctest::Approx(0.0));

  CHECK_THROWS_AS(mat_mul(Matrix(2, 3), Matrix(2, 2)), DimensionError);
}

TEST_CASE("omp kernels agree with serial reference") {
  testutil::Rng rng(12);
  Matrix a = rng.matrix(70, 65), b = rng.matrix(65, 70);
  CHECK(frobenius_distance(mat_mul(a, b), serial::mat_mul(a, b)) < 1e-12);
  Matrix c = rng.matrix(9, 8), d = rng.matrix(8, 9);
  CHECK(frobenius_distance(kron(c, d), serial::kron(c, d)) < 1e-12);
}

TEST_CASE("solve_linear") {
  testutil::Rng rng(13);
  Matrix b = rng.matrix(3, 2);
  CHECK(frobenius_distance(solve_linear(Matrix::identity(3), b), b) < 1e-14);

  Matrix a = Matrix::diagonal({Complex(2, 0), Complex(4, 0)});
  Matrix x = solve_linear(a, Matrix::identity(2));
  CHECK(frobenius_distance(x, Matrix::diagonal({Complex(0.5, 0), Complex(0.25, 0)})) < 1e-14);

  Matrix j = Matrix::jordan(2, 0.0);
  Matrix rhs = mat2(0, 0, 1, 0);
  CHECK_THROWS_AS(solve_linear(j, rhs), SingularMatrixError);

  // Residual bound on a well-conditioned random system.
  Matrix m = rng.matrix(6, 6);
  Matrix rhs6 = rng.matrix(6, 3);
  Matrix sol = solve_linear(m, rhs6);
  CHECK(frobenius_distance(mat_mul(m, sol), rhs6) <=
        kTol.residual_atol * (1.0 + rhs6.frobenius_norm()));
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix::jordan(2, 0.0)) == 1);
  CHECK(rank(mat2(1, 1, 1, 1)) == 1);
  CHECK(rank(Matrix(4, 4)) == 0);
  // rank + nullity == cols
  testutil::Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    Matrix a = rng.matrix(4, 6);
    std::size_t r = rank(a);
    CHECK(r + (6 - r) == 6);
    CHECK(r <= 4);
  }
}

TEST_CASE("pseudoinverse") {
  Matrix d = Matrix::diagonal({Complex(2, 0), Complex(0, 0)});
  CHECK(frobenius_distance(pseudoinverse(d), Matrix::diagonal({Complex(0.5, 0), 0})) < 1e-12);
  CHECK(frobenius_distance(pseudoinverse(Matrix::identity(4)), Matrix::identity(4)) < 1e-12);

  Matrix col(2, 1, {Complex(3, 0), Complex(4, 0)});
  Matrix p = pseudoinverse(col);
  CHECK(p.rows() == 1);
  CHECK(std::abs(p(0, 0) - Complex(3.0 / 25.0, 0)) < 1e-14);
  CHECK(std::abs(p(0, 1) - Complex(4.0 / 25.0, 0)) < 1e-14);

  CHECK(pseudoinverse(Matrix(3, 2)).frobenius_norm() == doctest::Approx(0.0));
}

TEST_CASE("pseudoinverse Penrose residuals, 200 per shape class") {
  testutil::Rng rng(16);
  auto check_one = [&](const Matrix& a) {
    Matrix p = pseudoinverse(a);
    const double s = 1.0 + a.frobenius_norm() * p.frobenius_norm();
    CHECK(frobenius_distance(mat_mul(mat_mul(a, p), a), a) / s <= kTol.residual_atol);
    CHECK(frobenius_distance(mat_mul(mat_mul(p, a), p), p) / s <= kTol.residual_atol);
    Matrix ap = mat_mul(a, p), pa = mat_mul(p, a);
    CHECK(frobenius_distance(ap, ap.conj_transpose()) / s <= kTol.residual_atol);
    CHECK(frobenius_distance(pa, pa.conj_transpose()) / s <= kTol.residual_atol);
  };
  for (int t = 0; t < 200; ++t) {
    check_one(rng.matrix(5, 5));
    check_one(rng.matrix(3, 6));
    check_one(rng.matrix(6, 3));
    check_one(mat_mul(rng.matrix(5, 2), rng.matrix(2, 5)));  // rank-deficient
  }
}

TEST_CASE("eigenvalues") {
  auto eig = eigenvalues(Matrix::diagonal({1, 2, 3}));
  REQUIRE(eig.size() == 3);
  CHECK(std::abs(eig[0].value - Complex(1, 0)) < 1e-8);
  CHECK(std::abs(eig[1].value - Complex(2, 0)) < 1e-8);
  CHECK(std::abs(eig[2].value - Complex(3, 0)) < 1e-8);

  auto eig_j = eigenvalues(Matrix::jordan(3, 0.0));
  REQUIRE(eig_j.size() == 1);
  CHECK(eig_j[0].multiplicity == 3);
  CHECK(std::abs(eig_j[0].value) < 1e-5);

  auto eig_rot = eigenvalues(mat2(0, 1, -1, 0));
  REQUIRE(eig_rot.size() == 2);
  CHECK(std::abs(eig_rot[0].value - Complex(0, -1)) < 1e-10);
  CHECK(std::abs(eig_rot[1].value - Complex(0, 1)) < 1e-10);
}

TEST_CASE("eigenvalues of triangular matrices equal the diagonal") {
  testutil::Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    Matrix a = rng.matrix(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < i; ++j) a(i, j) = 0.0;
    std::vector<Complex> diag;
    for (std::size_t i = 0; i < 6; ++i) diag.push_back(a(i, i));
    auto expected = cluster_points(diag, kTol.eig_cluster_tol);
    auto got = eigenvalues(a, kTol);
    REQUIRE(got.size() == expected.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(std::abs(got[i].value - expected[i].value) < 1e-7);
      CHECK(got[i].multiplicity == expected[i].multiplicity);
      total += got[i].multiplicity;
    }
    CHECK(total == 6);
  }
}

TEST_CASE("kron") {
  testutil::Rng rng(18);
  Matrix x = rng.matrix(3, 3);
  CHECK(frobenius_distance(kron(Matrix::identity(1), x), x) < 1e-15);

  Matrix d = Matrix::diagonal({1, 2});
  CHECK(frobenius_distance(kron(d, Matrix::identity(2)),
                           Matrix::diagonal({1, 1, 2, 2})) < 1e-15);

  // Mixed-product property on random pairs.
  for (int t = 0; t < 30; ++t) {
    Matrix a = rng.matrix(3, 3), b = rng.matrix(3, 3);
    Matrix c = rng.matrix(3, 3), d2 = rng.matrix(3, 3);
    Matrix lhs = mat_mul(kron(a, b), kron(c, d2));
    Matrix rhs = kron(mat_mul(a, c), mat_mul(b, d2));
    CHECK(frobenius_distance(lhs, rhs) <= 1e-12 * (1.0 + rhs.frobenius_norm()));
  }
}

TEST_CASE("mat_power") {
  testutil::Rng rng(19);
  Matrix a = rng.matrix(4, 4);
  CHECK(frobenius_distance(mat_power(a, 0), Matrix::identity(4)) < 1e-15);
  CHECK(mat_power(Matrix::jordan(3, 0.0), 3).frobenius_norm() == doctest::Approx(0.0));
  Matrix two_i = Matrix::identity(3) * Complex(2, 0);
  CHECK(frobenius_distance(mat_power(two_i, 5), Matrix::identity(3) * Complex(32, 0)) < 1e-12);
}

TEST_CASE("rank of powers is non-increasing") {
  testutil::Rng rng(20);
  for (int t = 0; t < 15; ++t) {
    Matrix a = mat_mul(rng.matrix(5, 3), rng.matrix(3, 5));
    std::size_t prev = 5;
    for (std::size_t k = 0; k <= 5; ++k) {
      std::size_t r = rank(mat_power(a, k));
      CHECK(r <= prev);
      prev = r;
    }
  }
}

TEST_CASE("power_rank_chain matches explicit powers") {
  testutil::Rng rng(21);
  Matrix j = Matrix::jordan(4, 0.0);
  auto chain = power_rank_chain(j);
  REQUIRE(chain.ranks.size() >= 5);
  CHECK(chain.ranks[0] == 4);
  CHECK(chain.ranks[1] == 3);
  CHECK(chain.ranks[4] == 0);
  CHECK(chain.stabilization == 4);

  for (int t = 0; t < 10; ++t) {
    Matrix a = mat_mul(rng.matrix(5, 4), rng.matrix(4, 5));
    auto c = power_rank_chain(a);
    for (std::size_t k = 0; k < c.ranks.size(); ++k)
      CHECK(c.ranks[k] == rank(mat_power(a, k)));
  }
}

TEST_CASE("non-finite entries are rejected") {
  std::vector<Complex> bad = {Complex(1, 0), Complex(0, 0), Complex(0, 0),
                              Complex(std::nan(""), 0)};
  CHECK_THROWS_AS(Matrix(2, 2, bad), NonFiniteError);
}
