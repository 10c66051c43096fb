#include "trefftz/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trefftz {

using std::numbers::pi;

std::vector<double> directions(int p) {
  if (p < 1) throw std::invalid_argument("directions: p must be >= 1");
  std::vector<double> t(p);
  for (int m = 0; m < p; ++m) t[m] = 2 * pi * m / p;
  return t;
}

double dir_a(int n, int p) {
  if (p < 1) throw std::invalid_argument("dir_a: p must be >= 1");
  return 2.0 * std::sin(pi * n / p);
}

double dir_b(int n, double t, int p) {
  if (p < 1) throw std::invalid_argument("dir_b: p must be >= 1");
  return std::sin(t - pi * n / p);
}

PlaneWaveBasis::PlaneWaveBasis(double kappa, Vec2 center, std::vector<double> angles)
    : kappa_(kappa), center_(center), angles_(std::move(angles)) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("plane-wave basis: kappa must be positive");
  if (angles_.empty()) throw std::invalid_argument("plane-wave basis: need at least one direction");
  const int p = size();
  dirs_.reserve(p);
  for (double t : angles_) {
    if (!std::isfinite(t)) throw std::invalid_argument("plane-wave basis: direction angle is not finite");
    dirs_.push_back({std::cos(t), std::sin(t)});
  }
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (norm(dirs_[i] - dirs_[j]) < 1e-12)
        throw std::invalid_argument("plane-wave basis: directions must be pairwise distinct");
  uniform_ = true;
  for (int m = 0; m < p && uniform_; ++m)
    uniform_ = std::abs(angles_[m] - 2 * pi * m / p) <= 1e-13;
}

PlaneWaveBasis PlaneWaveBasis::uniform(int p, double kappa, Vec2 center) {
  return PlaneWaveBasis(kappa, center, directions(p));
}

PlaneWaveBasis PlaneWaveBasis::fan(int p, double kappa, Vec2 center, double alpha, double beta) {
  if (p < 1) throw std::invalid_argument("fan: p must be >= 1");
  if (!(beta > alpha) || !(beta - alpha < 2 * pi))
    throw std::invalid_argument("fan: sector must satisfy alpha < beta < alpha + 2π");
  std::vector<double> t(p);
  if (p == 1) {
    t[0] = 0.5 * (alpha + beta);
  } else {
    for (int m = 0; m < p; ++m) t[m] = alpha + (beta - alpha) * m / (p - 1);
  }
  return PlaneWaveBasis(kappa, center, std::move(t));
}

cd PlaneWaveBasis::phi(int m, Vec2 x) const {
  const double arg = kappa_ * dot(dirs_.at(m), x - center_);
  return {std::cos(arg), std::sin(arg)};
}

cd PlaneWaveBasis::dphi_dn(int m, Vec2 x, Vec2 n) const {
  if (std::abs(norm(n) - 1.0) > 1e-10) throw std::invalid_argument("dphi_dn: normal is not a unit vector");
  return cd{0.0, kappa_ * dot(dirs_.at(m), n)} * phi(m, x);
}

void PlaneWaveBasis::phi_all(Vec2 x, cd* out) const {
  const Vec2 r = x - center_;
  for (std::size_t m = 0; m < dirs_.size(); ++m) {
    const double arg = kappa_ * dot(dirs_[m], r);
    out[m] = {std::cos(arg), std::sin(arg)};
  }
}

}  // namespace trefftz
