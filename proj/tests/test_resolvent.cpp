#include "doctest.h"

#include <cmath>
#include <complex>

#include "drazin/resolvent.hpp"
#include "drazin/eig.hpp"
#include "drazin/factor.hpp"
#include "test_util.hpp"

using namespace drazin;
using namespace drazin::resolvent;
using numkernel::mat_mul;

TEST_CASE("resolvent_at") {
  Matrix z(2, 2);
  CHECK(frobenius_distance(resolvent_at(z, Complex(2, 0)),
                           Matrix::identity(2) * Complex(0.5, 0)) < 1e-12);

  Matrix d = Matrix::diagonal({Complex(1, 0), Complex(3, 0)});
  Matrix expect = Matrix::diagonal({Complex(-1, 0), Complex(-1.0 / 3.0, 0)});
  CHECK(frobenius_distance(resolvent_at(d, Complex(0, 0)), expect) < 1e-12);

  CHECK_THROWS_AS(resolvent_at(d, Complex(1, 0)), OnSpectrumError);
}

TEST_CASE("resolvent identity on random safe pairs") {
  testutil::Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    Matrix a = rng.matrix(4, 4);
    Complex lam(6 + t, 2), mu(-5, -4 - t);
    Matrix rl = resolvent_at(a, lam);
    Matrix rm = resolvent_at(a, mu);
    Matrix lhs = rl - rm;
    Matrix rhs = mat_mul(rl, rm) * (mu - lam);
    CHECK(frobenius_distance(lhs, rhs) <= 1e-9 * (1 + lhs.frobenius_norm()));
  }
}

TEST_CASE("laurent_algebraic") {
  SUBCASE("diag(0,3) at 0") {
    Matrix a = Matrix::diagonal({Complex(0, 0), Complex(3, 0)});
    auto exp = laurent_algebraic(a, Complex(0, 0));
    CHECK(exp.pole_order == 1);
    REQUIRE(exp.principal.size() == 1);
    CHECK(frobenius_distance(exp.principal[0], Matrix::diagonal({1, 0})) < 1e-10);
    CHECK(exp.cross_residual <= 1e-6);
  }
  SUBCASE("J_2(0) at 0") {
    Matrix j = Matrix::jordan(2, 0.0);
    auto exp = laurent_algebraic(j, Complex(0, 0));
    CHECK(exp.pole_order == 2);
    REQUIRE(exp.principal.size() == 2);
    CHECK(frobenius_distance(exp.principal[0], Matrix::identity(2)) < 1e-10);
    CHECK(frobenius_distance(exp.principal[1], j) < 1e-10);
    CHECK(exp.cross_residual <= 1e-6);
  }
  SUBCASE("diag(J_3(2), 7) at 2 has pole order 3") {
    Matrix a(4, 4);
    a(0, 0) = a(1, 1) = a(2, 2) = 2.0;
    a(0, 1) = a(1, 2) = 1.0;
    a(3, 3) = 7.0;
    auto exp = laurent_algebraic(a, Complex(2, 0));
    CHECK(exp.pole_order == 3);
    CHECK(exp.cross_residual <= 1e-6);
  }
  SUBCASE("off-spectrum center rejected") {
    Matrix a = Matrix::diagonal({Complex(1, 0), Complex(2, 0)});
    CHECK_THROWS_AS(laurent_algebraic(a, Complex(9, 0)), NotEigenvalueError);
  }
}

TEST_CASE("laurent b_1 is an idempotent commuting with a, at every pole") {
  testutil::Rng rng(52);
  for (int t = 0; t < 10; ++t) {
    Matrix a = rng.matrix(4, 4);
    for (std::size_t j = 0; j < 4; ++j) a(3, j) = a(0, j);  // singular
    for (const auto& p : poles(a)) {
      auto exp = laurent_algebraic(a, p.value);
      const Matrix& b1 = exp.principal[0];
      CHECK(frobenius_distance(mat_mul(b1, b1), b1) <= 1e-8 * (1 + b1.frobenius_norm()));
      CHECK(frobenius_distance(mat_mul(a, b1), mat_mul(b1, a)) <=
            1e-8 * (1 + a.frobenius_norm() * b1.frobenius_norm()));
    }
  }
}

TEST_CASE("laurent_contour against the algebraic oracle") {
  Matrix a = Matrix::diagonal({Complex(0, 0), Complex(3, 0)});
  CHECK(frobenius_distance(laurent_contour(a, Complex(0, 0), 1),
                           Matrix::diagonal({1, 0})) < 1e-10);
  // Beyond the pole order the coefficients vanish.
  CHECK(laurent_contour(a, Complex(0, 0), 2).frobenius_norm() < 1e-10);

  Matrix j = Matrix::jordan(2, 0.0);
  CHECK(frobenius_distance(laurent_contour(j, Complex(0, 0), 2), j) < 1e-10);
}

TEST_CASE("laurent_contour configuration validation") {
  Matrix j = Matrix::jordan(2, 0.0);
  CHECK_THROWS_AS(laurent_contour(j, Complex(0, 0), 1, ContourConfig{1.5, 64}), ContourError);
  CHECK_THROWS_AS(laurent_contour(j, Complex(0, 0), 1, ContourConfig{0.5, 48}), ContourError);
  CHECK_THROWS_AS(laurent_contour(j, Complex(0, 0), 1, ContourConfig{0.5, 8}), ContourError);
  // Clusters 1e-7 apart: no safe annulus.
  Matrix tight = Matrix::diagonal({Complex(0, 0), Complex(1e-7, 0)});
  CHECK_THROWS_AS(laurent_contour(tight, Complex(0, 0), 1), ContourError);
}

TEST_CASE("quadrature convergence: doubling nodes changes little") {
  testutil::Rng rng(53);
  for (int t = 0; t < 8; ++t) {
    Matrix a = rng.matrix(4, 4);
    auto clusters = numkernel::eigenvalues(a);
    Complex lam = clusters.front().value;
    Matrix c32 = laurent_contour(a, lam, 1, ContourConfig{0.5, 32});
    Matrix c64 = laurent_contour(a, lam, 1, ContourConfig{0.5, 64});
    CHECK(frobenius_distance(c32, c64) <= 1e-9 * (1 + c64.frobenius_norm()));
  }
}

TEST_CASE("cross-validation over a random singular corpus") {
  testutil::Rng rng(54);
  for (int t = 0; t < 10; ++t) {
    Matrix a = rng.matrix(3, 3);
    for (std::size_t j = 0; j < 3; ++j) a(2, j) = a(0, j) * Complex(0, 1);
    for (const auto& p : poles(a)) {
      auto exp = laurent_algebraic(a, p.value);
      CHECK(exp.cross_residual <= 1e-6 * (1 + a.frobenius_norm()));
      CHECK(exp.pole_order == p.order);
    }
  }
}

TEST_CASE("poles") {
  auto p1 = poles(Matrix::diagonal({Complex(1, 0), Complex(2, 0)}));
  REQUIRE(p1.size() == 2);
  CHECK(std::abs(p1[0].value - Complex(1, 0)) < 1e-10);
  CHECK(p1[0].order == 1);
  CHECK(std::abs(p1[1].value - Complex(2, 0)) < 1e-10);
  CHECK(p1[1].order == 1);

  auto p2 = poles(Matrix::jordan(3, 0.0));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].order == 3);

  Matrix a(3, 3);
  a(0, 0) = a(1, 1) = a(2, 2) = 4.0;
  a(0, 1) = 1.0;
  auto p3 = poles(a);
  REQUIRE(p3.size() == 1);
  CHECK(std::abs(p3[0].value - Complex(4, 0)) < 1e-8);
  CHECK(p3[0].order == 2);
}

TEST_CASE("pole order equals Drazin index for constructed Jordan structures") {
  for (std::size_t k = 1; k <= 5; ++k) {
    Matrix a(k + 1, k + 1);
    for (std::size_t i = 0; i + 1 < k; ++i) a(i, i + 1) = 1.0;  // J_k(0)
    a(k, k) = 3.0;
    auto ps = poles(a);
    bool found = false;
    for (const auto& p : ps)
      if (std::abs(p.value) < 1e-8) {
        found = true;
        CHECK(p.order == k);
      }
    CHECK(found);
  }
}

TEST_CASE("ies certifies emptiness") {
  auto c1 = ies(Matrix::jordan(5, 0.0));
  CHECK(c1.empty);
  REQUIRE(c1.certifications.size() == 1);
  CHECK(c1.certifications[0].order == 5);

  auto c2 = ies(Matrix::diagonal({Complex(1, 0), Complex(2, 0), Complex(3, 0)}));
  CHECK(c2.empty);
  CHECK(c2.certifications.size() == 3);
  for (const auto& p : c2.certifications) CHECK(p.order == 1);
}

TEST_CASE("theorem11_check") {
  auto r1 = theorem11_check(Matrix::jordan(2, 0.0));
  CHECK(r1.pass);
  REQUIRE(r1.poles_base.size() == 1);
  CHECK(r1.poles_base[0].order == 2);
  CHECK(r1.poles_left[0].order == 2);
  CHECK(r1.poles_right[0].order == 2);

  Matrix a(3, 3);
  a(0, 0) = 2.0;
  a(1, 2) = 1.0;
  auto r2 = theorem11_check(a);
  CHECK(r2.pass);
  REQUIRE(r2.poles_base.size() == 2);

  auto r3 = theorem11_check(Matrix::diagonal({Complex(1, 0), Complex(5, 0)}));
  CHECK(r3.pass);
  for (const auto& p : r3.poles_base) CHECK(p.order == 1);
}
