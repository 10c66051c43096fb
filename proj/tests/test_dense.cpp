#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "trefftz/errors.hpp"

using namespace trefftz;
using namespace testing_support;

TEST_CASE("matrix-vector product against an explicit loop") {
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 33u}) {
    const DenseMatrix a = random_matrix(n);
    const CVector x = random_vector(n);
    CVector want(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) want[i] += a(i, j) * x[j];
    CHECK(max_diff(a.apply(x), want) < 1e-13);
  }
}

TEST_CASE("matrix product, adjoint and norms") {
  const DenseMatrix a = random_matrix(9), b = random_matrix(9);
  const DenseMatrix ab = a * b;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      cd s = 0;
      for (std::size_t k = 0; k < 9; ++k) s += a(i, k) * b(k, j);
      CHECK(std::abs(ab(i, j) - s) < 1e-13);
    }
  CHECK(max_diff((a * b).adjoint(), b.adjoint() * a.adjoint()) < 1e-13);
  CHECK((a + a.adjoint()).hermitian_defect() < 1e-15);
  CHECK(DenseMatrix::identity(4).frobenius() == doctest::Approx(2.0));
  CHECK(max_diff(a - a, DenseMatrix(9)) == 0.0);
}

TEST_CASE("LU solve") {
  const DenseMatrix a = random_matrix(20);
  const CVector b = random_vector(20);
  const CVector x = LuFactorization(a).solve(b);
  CHECK(rel_diff(a.apply(x), b) < 1e-12);
  CHECK_THROWS_AS(LuFactorization(DenseMatrix(3)), SingularOperatorError);
}

TEST_CASE("Hermitian eigen-decomposition, powers and SVD") {
  const DenseMatrix a = random_hpd(12, 1e4);
  const auto vals = hermitian_eigenvalues(a);
  CHECK(vals.front() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(vals.back() == doctest::Approx(1e4).epsilon(1e-10));
  CHECK(cond2(a) == doctest::Approx(1e4).epsilon(1e-8));
  const DenseMatrix r = hermitian_power(a, -0.5);
  CHECK(max_diff(r * a * r, DenseMatrix::identity(12)) < 1e-10);
  const auto sv = singular_values(a);
  CHECK(sv.front() >= sv.back());
  CHECK_THROWS(hermitian_power(-1.0 * a, 0.5));
}
