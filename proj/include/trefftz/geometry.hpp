#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace trefftz {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a);

/// Angles 0 <= θ_0 < θ_1 < ... < θ_{L-1} < 2π of vertices on a circle of
/// radius h about the origin.
struct CyclicAngles {
  std::vector<double> theta;
  double h = 1.0;

  void validate() const;
};

/// Gauss–Legendre nodes/weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// Boundary rule: points with the outward unit normal at each point.
struct BoundaryRule {
  std::vector<Vec2> points;
  std::vector<Vec2> normals;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  double total_weight() const;
};

struct AreaRule {
  std::vector<Vec2> points;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  double total_weight() const;
};

class ElementGeometry {
 public:
  enum class Kind { Disk, Polygon };

  static ElementGeometry disk(Vec2 center, double h);
  /// Counter-clockwise simple polygon; the basis center defaults to the
  /// area centroid.
  static ElementGeometry polygon(std::vector<Vec2> vertices);
  static ElementGeometry polygon(std::vector<Vec2> vertices, Vec2 center);

  Kind kind() const { return kind_; }
  bool is_disk() const { return kind_ == Kind::Disk; }
  Vec2 center() const { return center_; }
  /// Disk radius, or polygon circumradius measured from center().
  double h() const { return h_; }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t edge_count() const { return vertices_.size(); }
  Vec2 edge_start(std::size_t j) const;
  Vec2 edge_end(std::size_t j) const;
  Vec2 edge_normal(std::size_t j) const;
  double edge_length(std::size_t j) const;

  double perimeter() const;
  double area() const;
  Vec2 centroid() const;

  /// Set when the polygon was built from CyclicAngles.
  const std::optional<CyclicAngles>& cyclic() const { return cyclic_; }

  /// Same shape with a different basis center; h is recomputed.
  ElementGeometry with_center(Vec2 c) const;

  std::string describe() const;

 private:
  friend ElementGeometry cyclic_polygon(const CyclicAngles& angles);
  void finish_polygon();

  Kind kind_ = Kind::Disk;
  Vec2 center_{};
  double h_ = 1.0;
  std::vector<Vec2> vertices_;
  std::optional<CyclicAngles> cyclic_;
};

/// Vertices h(cos θ_j, sin θ_j), centered at the origin.
ElementGeometry cyclic_polygon(const CyclicAngles& angles);

struct RadialPoint {
  double r;  ///< distance from the origin to the edge along direction t
  double g;  ///< arclength density |dx/dt|
};

/// Polar parametrization of edge j (from θ_j to θ_{j+1}, wrapping with 2π
/// for the last edge).
RadialPoint radial_param(const CyclicAngles& angles, std::size_t edge, double t);

/// Gauss–Legendre per straight edge; periodic trapezoid for the disk.
BoundaryRule edge_quadrature(const ElementGeometry& geom, int points_per_edge);

/// Centroid-fan collapsed tensor Gauss for polygons; Gauss in r times
/// trapezoid in angle for the disk. Weights sum to the area.
AreaRule area_quadrature(const ElementGeometry& geom, int order);

/// max(32, ceil(6 + 3 κh)).
int default_points_per_edge(double kappa_h);

// Named shapes used by the experiments.
ElementGeometry equilateral_triangle(double h);
ElementGeometry regular_polygon(int sides, double h);
ElementGeometry square(double h);  // vertices at θ = mπ/2
ElementGeometry cyclic_quadrilateral(double h);  // θ = 0, 3π/4, 9π/8, 7π/4
ElementGeometry general_quadrilateral();  // (0.3,0), (2,0.5), (1.5,1.3), (0,1.2)

enum class SkinnyCenter { Centroid, Apex, ShortSideVertex };
/// Isosceles triangle with short side 2 sin(π/25) (vertical) and apex at
/// distance 1 + cos(π/25) from it, translated so its centroid is the origin.
ElementGeometry skinny_triangle(SkinnyCenter center = SkinnyCenter::Centroid);

}  // namespace trefftz
