#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "support.hpp"
#include "trefftz/geometry.hpp"

using namespace trefftz;
using testing_support::uniform;
using testing_support::uniform_int;

namespace {
constexpr double pi = std::numbers::pi;

bool near(Vec2 a, Vec2 b, double tol = 1e-14) { return norm(a - b) < tol; }

double sum(const std::vector<double>& w) {
  double s = 0;
  for (double x : w) s += x;
  return s;
}
}  // namespace

TEST_CASE("cyclic polygon examples") {
  const auto sq = cyclic_polygon({{0, pi / 2, pi, 3 * pi / 2}, 1.0});
  REQUIRE(sq.edge_count() == 4);
  CHECK(near(sq.vertices()[0], {1, 0}));
  CHECK(near(sq.vertices()[1], {0, 1}));
  CHECK(near(sq.vertices()[2], {-1, 0}));
  CHECK(near(sq.vertices()[3], {0, -1}));

  const auto quad = cyclic_polygon({{0, 3 * pi / 4, 9 * pi / 8, 7 * pi / 4}, 1.0});
  CHECK(near(quad.vertices()[1], {std::cos(3 * pi / 4), std::sin(3 * pi / 4)}));
  CHECK(quad.h() == doctest::Approx(1.0));
  CHECK(near(cyclic_quadrilateral(1.0).vertices()[2], quad.vertices()[2]));

  const auto tri = cyclic_polygon({{0, 2 * pi / 3, 4 * pi / 3}, 0.1});
  CHECK(tri.h() == doctest::Approx(0.1).epsilon(1e-14));
  for (std::size_t j = 0; j < 3; ++j) CHECK(tri.edge_length(j) == doctest::Approx(0.1 * std::sqrt(3.0)));

  CHECK_THROWS(cyclic_polygon({{0, 1}, 1.0}));
  CHECK_THROWS(cyclic_polygon({{0, 2, 1}, 1.0}));
  CHECK_THROWS(cyclic_polygon({{0, 1, 7}, 1.0}));
}

TEST_CASE("polygon validation") {
  CHECK_THROWS(ElementGeometry::polygon({{0, 0}, {1, 0}}));
  CHECK_THROWS(ElementGeometry::polygon({{0, 0}, {0, 1}, {1, 0}}));             // clockwise
  CHECK_THROWS(ElementGeometry::polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}));     // bow tie
  CHECK_THROWS(ElementGeometry::polygon({{0, 0}, {1, 0}, {2, 0}}));             // zero area
  const auto g = general_quadrilateral();
  CHECK(near(g.vertices()[0], {0.3, 0}));
  CHECK(near(g.vertices()[3], {0, 1.2}));
  CHECK(near(g.center(), g.centroid()));
}

TEST_CASE("edge normals are unit, orthogonal and outward") {
  for (const auto& g : {equilateral_triangle(0.1), square(1.0), cyclic_quadrilateral(1.0), general_quadrilateral(),
                        regular_polygon(9, 2.0), skinny_triangle()}) {
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
      const Vec2 n = g.edge_normal(j), e = g.edge_end(j) - g.edge_start(j);
      CHECK(norm(n) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(dot(n, e)) < 1e-14 * norm(e));
      CHECK(cross(e, n) < 0);  // normal to the right of a CCW edge
      CHECK(dot(n, g.edge_start(j) - g.centroid()) > 0);
    }
  }
}

TEST_CASE("radial parametrisation") {
  const CyclicAngles sq{{0, pi / 2, pi, 3 * pi / 2}, 1.0};
  const auto mid = radial_param(sq, 0, pi / 4);
  CHECK(mid.r == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(mid.g == doctest::Approx(1 / std::sqrt(2.0)));
  for (std::size_t j = 0; j < 4; ++j) CHECK(radial_param(sq, j, sq.theta[j]).r == doctest::Approx(1.0));
  CHECK(radial_param(sq, 3, 2 * pi).r == doctest::Approx(1.0));
  CHECK_THROWS(radial_param(sq, 0, 2.0));

  CyclicAngles hex{{}, 1.3};
  for (int j = 0; j < 6; ++j) hex.theta.push_back(j * pi / 3);
  const auto rp = radial_param(hex, 2, hex.theta[2] + pi / 6);
  CHECK(rp.g == doctest::Approx(1.3 * std::cos(pi / 6)));

  // g equals |dx/dt| by central differences, and r(t)(cos t, sin t) lies on the edge.
  for (int trial = 0; trial < 200; ++trial) {
    const auto geom = cyclic_quadrilateral(1.7);
    const CyclicAngles& ang = *geom.cyclic();
    const std::size_t j = uniform_int(0, 3);
    const double lo = ang.theta[j], hi = j + 1 < 4 ? ang.theta[j + 1] : ang.theta[0] + 2 * pi;
    const double t = uniform(lo + 1e-3, hi - 1e-3), s = 1e-6;
    auto x = [&](double tt) {
      const double r = radial_param(ang, j, tt).r;
      return Vec2{r * std::cos(tt), r * std::sin(tt)};
    };
    CHECK(radial_param(ang, j, t).g == doctest::Approx(norm(x(t + s) - x(t - s)) / (2 * s)).epsilon(1e-7));
    const Vec2 a = geom.edge_start(j), b = geom.edge_end(j), p = x(t);
    CHECK(std::abs(cross(b - a, p - a)) / norm(b - a) < 1e-12 * ang.h);
  }
}

TEST_CASE("edge quadrature weights and exactness") {
  const auto sq = square(1.0);
  CHECK(sum(edge_quadrature(sq, 2).weights) == doctest::Approx(4 * std::sqrt(2.0)).epsilon(1e-14));
  const auto d = ElementGeometry::disk({0, 0}, 1.0);
  CHECK(sum(edge_quadrature(d, 64).weights) == doctest::Approx(2 * pi).epsilon(1e-14));

  const auto rule = edge_quadrature(sq, 8);
  Vec2 first{};
  for (std::size_t k = 0; k < rule.size(); ++k) first = first + rule.weights[k] * rule.points[k];
  CHECK(std::abs(first.x) < 1e-14);
  CHECK(std::abs(first.y) < 1e-14);

  // Degree 2n-1 polynomials along each edge are integrated exactly.
  for (int n = 2; n <= 12; ++n) {
    const auto g = general_quadrilateral();
    const auto r = edge_quadrature(g, n);
    const int deg = 2 * n - 1;
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
      const Vec2 a = g.edge_start(j), b = g.edge_end(j);
      const double len = g.edge_length(j);
      double q = 0;
      for (std::size_t k = j * n; k < (j + 1) * n; ++k) {
        const double s = norm(r.points[k] - a) / len;  // local coordinate in [0, 1]
        q += r.weights[k] * std::pow(s, deg);
      }
      CHECK(q == doctest::Approx(len / (deg + 1)).epsilon(1e-12));
      (void)b;
    }
  }
}

TEST_CASE("oscillatory boundary integral converges at the default resolution") {
  for (double kh : {0.1 * pi, pi, 10 * pi}) {
    const auto g = cyclic_quadrilateral(1.0);
    const double kappa = kh / g.h();
    const Vec2 d{std::cos(0.7), std::sin(0.7)};
    auto integral = [&](int n) {
      const auto r = edge_quadrature(g, n);
      std::complex<double> s = 0;
      for (std::size_t k = 0; k < r.size(); ++k) s += r.weights[k] * std::polar(1.0, kappa * dot(d, r.points[k]));
      return s;
    };
    const int n = static_cast<int>(std::ceil(4 + 2 * kh));
    const auto a = integral(std::max(n, default_points_per_edge(kh))), b = integral(2 * std::max(n, default_points_per_edge(kh)));
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
  }
}

TEST_CASE("area quadrature") {
  CHECK(sum(area_quadrature(square(1.0), 4).weights) == doctest::Approx(2.0).epsilon(1e-13));
  const auto disk = ElementGeometry::disk({0, 0}, 1.0);
  const auto dr = area_quadrature(disk, 8);
  CHECK(sum(dr.weights) == doctest::Approx(pi).epsilon(1e-13));
  double x2 = 0;
  for (std::size_t k = 0; k < dr.size(); ++k) x2 += dr.weights[k] * dr.points[k].x * dr.points[k].x;
  CHECK(x2 == doctest::Approx(pi / 4).epsilon(1e-13));

  const auto g = general_quadrilateral();
  const auto gr = area_quadrature(g, 6);
  CHECK(sum(gr.weights) == doctest::Approx(g.area()).epsilon(1e-13));
  Vec2 m{};
  for (std::size_t k = 0; k < gr.size(); ++k) m = m + gr.weights[k] * gr.points[k];
  CHECK(near((1 / g.area()) * m, g.centroid(), 1e-13));
}

TEST_CASE("skinny triangle reconstruction") {
  const auto t = skinny_triangle(SkinnyCenter::Centroid);
  REQUIRE(t.edge_count() == 3);
  double shortest = 1e9;
  for (std::size_t j = 0; j < 3; ++j) shortest = std::min(shortest, t.edge_length(j));
  CHECK(shortest == doctest::Approx(2 * std::sin(pi / 25)));
  CHECK(near(t.centroid(), {0, 0}, 1e-14));
  const auto apex = skinny_triangle(SkinnyCenter::Apex);
  CHECK(near(apex.center(), apex.vertices()[0], 1e-14));
  // apex to the midpoint of the short side
  const Vec2 mid = 0.5 * (t.vertices()[1] + t.vertices()[2]);
  CHECK(norm(t.vertices()[0] - mid) == doctest::Approx(1 + std::cos(pi / 25)));
}
