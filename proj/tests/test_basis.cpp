#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "trefftz/basis.hpp"

using namespace trefftz;
using testing_support::uniform;
using testing_support::uniform_int;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("uniform directions") {
  const auto d4 = directions(4);
  REQUIRE(d4.size() == 4);
  for (int m = 0; m < 4; ++m) CHECK(d4[m] == doctest::Approx(m * pi / 2));
  CHECK(directions(1) == std::vector<double>{0.0});
  CHECK(directions(3)[2] == doctest::Approx(4 * pi / 3));
}

TEST_CASE("direction algebra a and b") {
  CHECK(dir_a(0, 5) == 0.0);
  CHECK(dir_a(1, 4) == doctest::Approx(std::sqrt(2.0)));
  CHECK(dir_a(2 + 7, 7) == doctest::Approx(-dir_a(2, 7)));
  CHECK(dir_a(2 - 7, 7) == doctest::Approx(-dir_a(2, 7)));
  CHECK(dir_b(2 + 7, 1.3, 7) == doctest::Approx(-dir_b(2, 1.3, 7)));
  CHECK(dir_b(2 - 7, 1.3, 7) == doctest::Approx(-dir_b(2, 1.3, 7)));
}

TEST_CASE("difference of directions factorises through a and b") {
  for (int trial = 0; trial < 300; ++trial) {
    const int p = uniform_int(2, 40);
    const auto basis = PlaneWaveBasis::uniform(p, 1.0);
    const int m = uniform_int(0, p - 1), l = uniform_int(0, p - 1);
    const double t = uniform(0, 2 * pi), r = uniform(0.1, 3.0);
    const Vec2 x{r * std::cos(t), r * std::sin(t)};
    const double lhs = dot(x, basis.direction(m) - basis.direction(l));
    CHECK(std::abs(lhs - r * dir_a(m - l, p) * dir_b(m + l, t, p)) < 1e-12 * std::max(1.0, r));
  }
}

TEST_CASE("plane-wave evaluation") {
  const Vec2 c{0.3, -0.2};
  const auto basis = PlaneWaveBasis::uniform(7, 2.5, c);
  for (int m = 0; m < 7; ++m) CHECK(std::abs(basis.phi(m, c) - 1.0) < 1e-15);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec2 x{uniform(-2, 2), uniform(-2, 2)};
    const int m = uniform_int(0, 6);
    CHECK(std::abs(basis.phi(m, x)) == doctest::Approx(1.0).epsilon(1e-14));

    const double a = uniform(0, 2 * pi), s = 1e-6;
    const Vec2 n{std::cos(a), std::sin(a)};
    const cd fd = (basis.phi(m, x + s * n) - basis.phi(m, x - s * n)) / (2 * s);
    const cd an = basis.dphi_dn(m, x, n);
    CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
  }
  CHECK_THROWS(basis.dphi_dn(0, c, {1.0, 0.1}));
  CHECK_THROWS(PlaneWaveBasis(1.0, {}, {0.0, 0.0}));
}

TEST_CASE("plane waves solve the Helmholtz equation") {
  for (int trial = 0; trial < 50; ++trial) {
    const double kappa = uniform(0.5, 5.0);
    const auto basis = PlaneWaveBasis::uniform(9, kappa, {uniform(-1, 1), uniform(-1, 1)});
    const Vec2 x{uniform(-1, 1), uniform(-1, 1)};
    const int m = uniform_int(0, 8);
    const double hs = 1e-3;
    const cd lap = (basis.phi(m, x + Vec2{hs, 0}) + basis.phi(m, x - Vec2{hs, 0}) + basis.phi(m, x + Vec2{0, hs}) +
                    basis.phi(m, x - Vec2{0, hs}) - 4.0 * basis.phi(m, x)) /
                   (hs * hs);
    // Five-point stencil error is O(h² κ⁴).
    CHECK(std::abs(lap + kappa * kappa * basis.phi(m, x)) < 0.2 * hs * hs * std::pow(kappa, 4));
  }
}

TEST_CASE("fan directions") {
  const auto fan = PlaneWaveBasis::fan(5, 1.0, {}, 0.2, 1.0);
  REQUIRE(fan.size() == 5);
  CHECK(fan.angles().front() == doctest::Approx(0.2));
  CHECK(fan.angles().back() == doctest::Approx(1.0));
  CHECK_FALSE(fan.is_uniform());
  CHECK(PlaneWaveBasis::uniform(6, 1.0).is_uniform());
  CHECK(PlaneWaveBasis::fan(1, 1.0, {}, 0.2, 1.0).angles()[0] == doctest::Approx(0.6));
}
