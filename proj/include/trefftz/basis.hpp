#pragma once

#include <complex>
#include <vector>

#include "trefftz/geometry.hpp"

namespace trefftz {

using cd = std::complex<double>;

/// θ_m = 2πm/p, m = 0..p-1.
std::vector<double> directions(int p);

/// a(n) = 2 sin(πn/p), b(n, t) = sin(t − πn/p) for equally spaced
/// directions; x·(d_m − d_ℓ) = |x| a(m−ℓ) b(m+ℓ, t) with x = |x|(cos t, sin t).
double dir_a(int n, int p);
double dir_b(int n, double t, int p);

/// Plane waves φ_m(x) = exp(iκ d_m·(x − x_K)), d_m = (cos θ_m, sin θ_m).
class PlaneWaveBasis {
 public:
  PlaneWaveBasis(double kappa, Vec2 center, std::vector<double> angles);

  static PlaneWaveBasis uniform(int p, double kappa, Vec2 center = {});
  /// p directions evenly spaced over the closed sector [alpha, beta]
  /// (beta − alpha < 2π); a single wave points along the bisector.
  static PlaneWaveBasis fan(int p, double kappa, Vec2 center, double alpha, double beta);

  int size() const { return static_cast<int>(angles_.size()); }
  double kappa() const { return kappa_; }
  Vec2 center() const { return center_; }
  const std::vector<double>& angles() const { return angles_; }
  Vec2 direction(int m) const { return dirs_.at(m); }
  /// True when angles are 2πm/p to rounding.
  bool is_uniform() const { return uniform_; }

  cd phi(int m, Vec2 x) const;
  /// ∇φ_m·n = iκ (d_m·n) φ_m(x); n must be a unit vector.
  cd dphi_dn(int m, Vec2 x, Vec2 n) const;

  /// φ_m(x) for all m into out[0..p).
  void phi_all(Vec2 x, cd* out) const;

  PlaneWaveBasis with_center(Vec2 c) const { return PlaneWaveBasis(kappa_, c, angles_); }

 private:
  double kappa_;
  Vec2 center_;
  std::vector<double> angles_;
  std::vector<Vec2> dirs_;
  bool uniform_ = false;
};

}  // namespace trefftz
