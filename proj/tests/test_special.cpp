#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "support.hpp"
#include "trefftz/special.hpp"

using namespace trefftz;
using testing_support::uniform;
using testing_support::uniform_int;

namespace {

constexpr double pi = std::numbers::pi;

// Ascending series in long double: an independent oracle for moderate x.
long double series_oracle(int n, long double x, int terms = 30) {
  long double sum = 0, term = std::pow(x / 2, n);
  for (int k = 1; k <= n; ++k) term /= k;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= -(x / 2) * (x / 2) / ((k + 1.0L) * (n + k + 1.0L));
  }
  return sum;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// Trapezoid rule on [0, 2π) for a periodic integrand.
template <class F>
std::complex<double> periodic_trapezoid(F f, int n) {
  std::complex<double> s = 0;
  for (int k = 0; k < n; ++k) s += f(2 * pi * k / n);
  return s * (2 * pi / n);
}

}  // namespace

TEST_CASE("bessel_j examples") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  const double want = static_cast<double>(series_oracle(5, 2.0L));
  CHECK(rel_err(bessel_j(5, 2.0), want) < 1e-13);
  CHECK(rel_err(bessel_j(5, 2.0), 0.007039629755871685) < 1e-14);
}

TEST_CASE("bessel_j agrees with a long double series on small arguments") {
  for (int trial = 0; trial < 400; ++trial) {
    const int n = uniform_int(0, 40);
    const double x = uniform(0.0, 8.0);
    const double want = static_cast<double>(series_oracle(n, x, 60));
    if (std::abs(want) < 1e-290) continue;
    INFO("n=" << n << " x=" << x);
    CHECK(rel_err(bessel_j(n, x), want) < 1e-12);
  }
}

TEST_CASE("bessel_j agrees with std::cyl_bessel_j away from zeros") {
  for (int trial = 0; trial < 400; ++trial) {
    const int n = uniform_int(0, 60);
    const double x = uniform(0.0, 120.0);
    const double want = std::cyl_bessel_j(static_cast<double>(n), x);
    if (std::abs(want) < 1e-3 * std::pow(10.0, -n / 4.0) || std::abs(want) < 1e-280) continue;
    INFO("n=" << n << " x=" << x);
    CHECK(rel_err(bessel_j(n, x), want) < 1e-9);
  }
}

TEST_CASE("bessel_j symmetries and bound") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(0, 30);
    const double x = uniform(0.0, 50.0);
    const double j = bessel_j(n, x);
    const double sign = (n % 2) ? -1.0 : 1.0;
    CHECK(bessel_j(-n, x) == doctest::Approx(sign * j).epsilon(1e-15));
    CHECK(bessel_j(n, -x) == doctest::Approx(sign * j).epsilon(1e-15));
    CHECK(std::abs(j) <= 1.0);
  }
}

TEST_CASE("three-term recurrence holds") {
  for (int trial = 0; trial < 500; ++trial) {
    const int n = uniform_int(1, 50);
    const double x = uniform(0.1, 100.0);
    const double lhs = bessel_j(n - 1, x) + bessel_j(n + 1, x);
    const double rhs = 2.0 * n / x * bessel_j(n, x);
    INFO("n=" << n << " x=" << x);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("Jacobi-Anger expansion reproduces exp(i x sin t)") {
  for (int trial = 0; trial < 50; ++trial) {
    const double x = uniform(0.0, 20.0), t = uniform(0.0, 2 * pi);
    std::complex<double> sum = bessel_j(0, x);
    for (int n = 1; n <= 60; ++n) {
      const double jn = bessel_j(n, x);
      sum += jn * std::polar(1.0, n * t) + ((n % 2) ? -jn : jn) * std::polar(1.0, -n * t);
    }
    CHECK(std::abs(sum - std::polar(1.0, x * std::sin(t))) < 1e-10);
  }
}

TEST_CASE("integral representation by 512-point trapezoid") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(-20, 20);
    const double x = uniform(0.0, 30.0);
    const auto integral =
        periodic_trapezoid([&](double t) { return std::polar(1.0, x * std::sin(t) - n * t); }, 512) / (2 * pi);
    CHECK(std::abs(integral.real() - bessel_j(n, x)) < 1e-10);
    CHECK(std::abs(integral.imag()) < 1e-10);
  }
}

TEST_CASE("Lemma identity between the two Bessel integrals") {
  for (int M = 0; M <= 5; ++M)
    for (int L = 0; L <= 5; ++L)
      for (double B : {1.0, 5.0, 10.0}) {
        const auto lhs = periodic_trapezoid(
            [&](double x) { return bessel_j(2 * M, B * std::sin(x / 2)) * std::polar(1.0, -L * x); }, 1024);
        const auto rhs = periodic_trapezoid(
            [&](double t) { return bessel_j(2 * L, B * std::sin(t)) * std::polar(1.0, -2.0 * M * t); }, 1024);
        CHECK(std::abs(lhs - rhs) < 1e-9);
      }
}

TEST_CASE("bessel_j_range matches pointwise evaluation") {
  for (double x : {0.0, 0.3, 2.5, 17.0, 80.0, 400.0}) {
    const auto all = bessel_j_range(90, x);
    REQUIRE(all.size() == 91);
    for (int n = 0; n <= 90; ++n) CHECK(std::abs(all[n] - bessel_j(n, x)) <= 1e-13 * std::max(1.0, std::abs(all[n])));
  }
}

TEST_CASE("extreme decay flushes to zero without error") {
  CHECK(bessel_j(2000, 1.0) == 0.0);
  CHECK(bessel_j(400, 1e-3) == 0.0);
  CHECK(std::isfinite(bessel_j(2000, 1e6)));
  CHECK_THROWS_AS(bessel_j(0, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(bessel_j(0, INFINITY), std::invalid_argument);
}

TEST_CASE("small-argument leading term") {
  CHECK(bessel_j_small_arg(0, 0.5) == 1.0);
  CHECK(bessel_j_small_arg(2, 0.2) == doctest::Approx(0.005).epsilon(1e-14));
  CHECK(rel_err(bessel_j_small_arg(10, 0.5), std::pow(0.25, 10) / 3628800.0) < 1e-13);
  CHECK(bessel_j_small_arg(1500, 1e-3) == 0.0);
  CHECK_FALSE(std::isnan(bessel_j_small_arg(1500, 1e-3)));
  // Leading-order agreement when z is tiny.
  CHECK(rel_err(bessel_j_small_arg(7, 1e-3), bessel_j(7, 1e-3)) < 1e-6);
}

TEST_CASE("ln_gamma on integers") {
  CHECK(ln_gamma(1) == 0.0);
  CHECK(ln_gamma(2) == 0.0);
  CHECK(rel_err(ln_gamma(11), std::log(3628800.0)) < 1e-12);
  double lf = 0;
  for (int n = 2; n <= 300; ++n) {
    lf += std::log(static_cast<double>(n - 1));
    CHECK(rel_err(ln_gamma(n), lf) < 1e-12);
  }
  CHECK_THROWS(ln_gamma(0));
}
