#include "trefftz/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trefftz {

using std::numbers::pi;

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

void CyclicAngles::validate() const {
  if (theta.size() < 3) throw std::invalid_argument("cyclic polygon needs at least 3 angles");
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("cyclic polygon radius must be positive");
  for (std::size_t j = 0; j < theta.size(); ++j) {
    if (!(theta[j] >= 0.0 && theta[j] < 2 * pi))
      throw std::invalid_argument("cyclic polygon angles must lie in [0, 2π)");
    if (j > 0 && !(theta[j] > theta[j - 1]))
      throw std::invalid_argument("cyclic polygon angles must be strictly increasing");
  }
}

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, double x, double& value, double& deriv) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  value = p1;
  deriv = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  if (n == 1) {
    rule.weights[0] = 2.0;
    return rule;
  }
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double value = 0.0, deriv = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      legendre(n, x, value, deriv);
      const double dx = value / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(n, x, value, deriv);
    const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double BoundaryRule::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }
double AreaRule::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

// ---------------------------------------------------------------------------

ElementGeometry ElementGeometry::disk(Vec2 center, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("disk radius must be positive");
  ElementGeometry g;
  g.kind_ = Kind::Disk;
  g.center_ = center;
  g.h_ = h;
  return g;
}

namespace {

double signed_area(const std::vector<Vec2>& v) {
  double a = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) a += cross(v[j], v[(j + 1) % v.size()]);
  return 0.5 * a;
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

}  // namespace

void ElementGeometry::finish_polygon() {
  const auto& v = vertices_;
  const std::size_t n = v.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (const auto& p : v)
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("polygon vertex is not finite");
  const double a = signed_area(v);
  double scale = 0.0;
  for (const auto& p : v) scale = std::max(scale, norm(p - v[0]));
  if (!(std::abs(a) > 1e-14 * scale * scale)) throw std::invalid_argument("polygon has zero area");
  if (a < 0) throw std::invalid_argument("polygon vertices must be counter-clockwise");
  for (std::size_t i = 0; i < n; ++i) {
    if (norm(v[(i + 1) % n] - v[i]) == 0.0) throw std::invalid_argument("polygon has a repeated vertex");
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        throw std::invalid_argument("polygon is self-intersecting");
    }
  }
  h_ = 0.0;
  for (const auto& p : v) h_ = std::max(h_, norm(p - center_));
}

ElementGeometry ElementGeometry::polygon(std::vector<Vec2> vertices) {
  ElementGeometry g;
  g.kind_ = Kind::Polygon;
  g.vertices_ = std::move(vertices);
  if (g.vertices_.size() >= 3 && signed_area(g.vertices_) != 0.0) g.center_ = g.centroid();
  g.finish_polygon();
  return g;
}

ElementGeometry ElementGeometry::polygon(std::vector<Vec2> vertices, Vec2 center) {
  ElementGeometry g;
  g.kind_ = Kind::Polygon;
  g.vertices_ = std::move(vertices);
  g.center_ = center;
  g.finish_polygon();
  return g;
}

Vec2 ElementGeometry::edge_start(std::size_t j) const { return vertices_.at(j); }
Vec2 ElementGeometry::edge_end(std::size_t j) const { return vertices_.at((j + 1) % vertices_.size()); }

Vec2 ElementGeometry::edge_normal(std::size_t j) const {
  const Vec2 e = edge_end(j) - edge_start(j);
  const double len = norm(e);
  return {e.y / len, -e.x / len};
}

double ElementGeometry::edge_length(std::size_t j) const { return norm(edge_end(j) - edge_start(j)); }

double ElementGeometry::perimeter() const {
  if (is_disk()) return 2 * pi * h_;
  double s = 0.0;
  for (std::size_t j = 0; j < edge_count(); ++j) s += edge_length(j);
  return s;
}

double ElementGeometry::area() const {
  if (is_disk()) return pi * h_ * h_;
  return signed_area(vertices_);
}

Vec2 ElementGeometry::centroid() const {
  if (is_disk()) return center_;
  const auto& v = vertices_;
  double cx = 0.0, cy = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const Vec2 a = v[j], b = v[(j + 1) % v.size()];
    const double c = cross(a, b);
    cx += (a.x + b.x) * c;
    cy += (a.y + b.y) * c;
  }
  const double a6 = 6.0 * signed_area(v);
  return {cx / a6, cy / a6};
}

ElementGeometry ElementGeometry::with_center(Vec2 c) const {
  if (is_disk()) return disk(c, h_);
  ElementGeometry g = *this;
  g.center_ = c;
  if (c != Vec2{0.0, 0.0}) g.cyclic_.reset();
  g.h_ = 0.0;
  for (const auto& p : g.vertices_) g.h_ = std::max(g.h_, norm(p - c));
  return g;
}

std::string ElementGeometry::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (is_disk()) {
    os << "disk(center=" << center_.x << "," << center_.y << ";h=" << h_ << ")";
  } else {
    os << "polygon(";
    for (std::size_t j = 0; j < vertices_.size(); ++j) os << (j ? ";" : "") << vertices_[j].x << "," << vertices_[j].y;
    os << ";center=" << center_.x << "," << center_.y << ")";
  }
  return os.str();
}

ElementGeometry cyclic_polygon(const CyclicAngles& angles) {
  angles.validate();
  std::vector<Vec2> v;
  v.reserve(angles.theta.size());
  for (double t : angles.theta) v.push_back({angles.h * std::cos(t), angles.h * std::sin(t)});
  ElementGeometry g = ElementGeometry::polygon(std::move(v), Vec2{0.0, 0.0});
  g.cyclic_ = angles;
  return g;
}

RadialPoint radial_param(const CyclicAngles& angles, std::size_t edge, double t) {
  angles.validate();
  const std::size_t L = angles.theta.size();
  if (edge >= L) throw std::invalid_argument("radial_param: edge index out of range");
  const double t0 = angles.theta[edge];
  const double t1 = edge + 1 < L ? angles.theta[edge + 1] : angles.theta[0] + 2 * pi;
  const double slack = 1e-12 * (1.0 + std::abs(t1));
  if (t < t0 - slack || t > t1 + slack) throw std::invalid_argument("radial_param: t outside the edge range");
  const double half = 0.5 * (t1 - t0);
  const double mid = 0.5 * (t1 + t0);
  const double sec = 1.0 / std::cos(mid - t);
  const double c = std::cos(half);
  return {angles.h * c * sec, angles.h * std::abs(c) * sec * sec};
}

BoundaryRule edge_quadrature(const ElementGeometry& geom, int points_per_edge) {
  if (points_per_edge < 2) throw std::invalid_argument("edge_quadrature: need at least 2 points per edge");
  BoundaryRule rule;
  if (geom.is_disk()) {
    const int n = points_per_edge;
    const double h = geom.h();
    const Vec2 c = geom.center();
    rule.points.reserve(n);
    for (int k = 0; k < n; ++k) {
      const double t = 2 * pi * k / n;
      const Vec2 dir{std::cos(t), std::sin(t)};
      rule.points.push_back(c + h * dir);
      rule.normals.push_back(dir);
      rule.weights.push_back(2 * pi * h / n);
    }
    return rule;
  }
  const GaussRule gl = gauss_legendre(points_per_edge);
  for (std::size_t j = 0; j < geom.edge_count(); ++j) {
    const Vec2 a = geom.edge_start(j), b = geom.edge_end(j);
    const Vec2 n = geom.edge_normal(j);
    const double half_len = 0.5 * geom.edge_length(j);
    for (int k = 0; k < points_per_edge; ++k) {
      const double s = 0.5 * (1.0 + gl.nodes[k]);
      rule.points.push_back(a + s * (b - a));
      rule.normals.push_back(n);
      rule.weights.push_back(gl.weights[k] * half_len);
    }
  }
  return rule;
}

AreaRule area_quadrature(const ElementGeometry& geom, int order) {
  if (order < 1) throw std::invalid_argument("area_quadrature: order must be >= 1");
  AreaRule rule;
  const GaussRule gl = gauss_legendre(order);
  if (geom.is_disk()) {
    const int nt = std::max(16, 4 * order);
    const double h = geom.h();
    for (int i = 0; i < order; ++i) {
      const double r = 0.5 * h * (1.0 + gl.nodes[i]);
      const double wr = 0.5 * h * gl.weights[i] * r * 2 * pi / nt;
      for (int k = 0; k < nt; ++k) {
        const double t = 2 * pi * k / nt;
        rule.points.push_back(geom.center() + r * Vec2{std::cos(t), std::sin(t)});
        rule.weights.push_back(wr);
      }
    }
    return rule;
  }
  // Fan of triangles (c, v_j, v_{j+1}); the collapsed map
  // x = c + s((1-t) a + t b - c) has Jacobian s |det(a - c, b - a)|.
  const Vec2 c = geom.centroid();
  for (std::size_t j = 0; j < geom.edge_count(); ++j) {
    const Vec2 a = geom.edge_start(j), b = geom.edge_end(j);
    const double det = std::abs(cross(a - c, b - a));
    for (int i = 0; i < order; ++i) {
      const double s = 0.5 * (1.0 + gl.nodes[i]);
      for (int k = 0; k < order; ++k) {
        const double t = 0.5 * (1.0 + gl.nodes[k]);
        const Vec2 edge_pt = a + t * (b - a);
        rule.points.push_back(c + s * (edge_pt - c));
        rule.weights.push_back(0.25 * gl.weights[i] * gl.weights[k] * s * det);
      }
    }
  }
  return rule;
}

int default_points_per_edge(double kappa_h) {
  return std::max(32, static_cast<int>(std::ceil(6.0 + 3.0 * kappa_h)));
}

ElementGeometry equilateral_triangle(double h) {
  return cyclic_polygon({{0.0, 2 * pi / 3, 4 * pi / 3}, h});
}

ElementGeometry regular_polygon(int sides, double h) {
  if (sides < 3) throw std::invalid_argument("regular polygon needs at least 3 sides");
  CyclicAngles a;
  a.h = h;
  for (int j = 0; j < sides; ++j) a.theta.push_back(2 * pi * j / sides);
  return cyclic_polygon(a);
}

ElementGeometry square(double h) { return regular_polygon(4, h); }

ElementGeometry cyclic_quadrilateral(double h) {
  return cyclic_polygon({{0.0, 3 * pi / 4, 9 * pi / 8, 7 * pi / 4}, h});
}

ElementGeometry general_quadrilateral() {
  return ElementGeometry::polygon({{0.3, 0.0}, {2.0, 0.5}, {1.5, 1.3}, {0.0, 1.2}});
}

ElementGeometry skinny_triangle(SkinnyCenter center) {
  const double c = std::cos(pi / 25), s = std::sin(pi / 25);
  std::vector<Vec2> v{{-1.0, 0.0}, {c, -s}, {c, s}};
  const Vec2 shift{(2 * c - 1.0) / 3.0, 0.0};
  for (auto& p : v) p = p - shift;
  Vec2 x0{0.0, 0.0};
  switch (center) {
    case SkinnyCenter::Centroid: break;
    case SkinnyCenter::Apex: x0 = v[0]; break;
    case SkinnyCenter::ShortSideVertex: x0 = v[1]; break;
  }
  return ElementGeometry::polygon(std::move(v), x0);
}

}  // namespace trefftz
