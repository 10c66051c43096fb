#pragma once

// Small helpers shared by the unit tests: seeded random data and
// tolerance-aware comparisons for complex vectors and matrices.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "trefftz/dense.hpp"
#include "trefftz/linalg.hpp"

namespace testing_support {

using trefftz::cd;
using trefftz::CVector;
using trefftz::DenseMatrix;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611ULL);
  return gen;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

inline int uniform_int(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng()); }

inline CVector random_vector(std::size_t n) {
  CVector v(n);
  for (auto& x : v) x = {uniform(-1, 1), uniform(-1, 1)};
  return v;
}

inline DenseMatrix random_matrix(std::size_t n) {
  DenseMatrix a(n);
  for (auto& x : a.data()) x = {uniform(-1, 1), uniform(-1, 1)};
  return a;
}

// Hermitian positive definite with eigenvalues spread log-uniformly over
// [1, cond]: Q diag(λ) Q* with Q from a QR-like orthonormalisation.
inline DenseMatrix random_hpd(std::size_t n, double cond) {
  const DenseMatrix g = random_matrix(n);
  const auto eig = trefftz::hermitian_eigen(g + g.adjoint());
  const DenseMatrix& q = eig.vectors;
  DenseMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = n > 1 ? static_cast<double>(k) / (n - 1) : 0.0;
    const double lambda = std::pow(cond, t);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lambda * q(i, k) * std::conj(q(j, k));
  }
  out.flags.hermitian = true;
  return out;
}

inline double max_diff(std::span<const cd> a, std::span<const cd> b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double rel_diff(std::span<const cd> a, std::span<const cd> b) {
  return trefftz::norm2(trefftz::sub(a, b)) / trefftz::norm2(b);
}

inline double max_diff(const DenseMatrix& a, const DenseMatrix& b) { return max_diff(a.data(), b.data()); }

}  // namespace testing_support
