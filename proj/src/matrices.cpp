#include "trefftz/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "trefftz/errors.hpp"
#include "trefftz/kernels.hpp"
#include "trefftz/special.hpp"

namespace trefftz {

using std::numbers::pi;

namespace {

void require_uniform(const PlaneWaveBasis& basis, const char* what) {
  if (!basis.is_uniform())
    throw std::invalid_argument(std::string(what) + ": closed form needs equally spaced directions");
}

// Fill a circulant matrix from its generating values c[k] = entry(0, k),
// using entry(m, l) = c[(l - m) mod p].
DenseMatrix circulant_from(const std::vector<double>& c) {
  const std::size_t p = c.size();
  DenseMatrix A(p);
  for (std::size_t m = 0; m < p; ++m)
    for (std::size_t l = 0; l < p; ++l) A(m, l) = c[(l + p - m) % p];
  A.flags = {true, true, true};
  return A;
}

double rel_diff(const DenseMatrix& a, const DenseMatrix& b) {
  const double nb = b.frobenius();
  return (a - b).frobenius() / (nb > 0.0 ? nb : 1.0);
}

}  // namespace

DenseMatrix disk_mass(const PlaneWaveBasis& basis, double h) {
  require_uniform(basis, "disk_mass");
  const int p = basis.size();
  const double kh = basis.kappa() * h;
  std::vector<double> c(p);
  for (int k = 0; k < p; ++k) c[k] = 2 * pi * h * bessel_j(0, kh * dir_a(k, p));
  return circulant_from(c);
}

DenseMatrix disk_cross(const PlaneWaveBasis& basis, double h) {
  require_uniform(basis, "disk_cross");
  const int p = basis.size();
  const double kappa = basis.kappa(), kh = kappa * h;
  std::vector<double> c(p);
  for (int k = 0; k < p; ++k) {
    const double a = dir_a(k, p);
    c[k] = -pi * kappa * h * a * bessel_j(1, kh * a);
  }
  return circulant_from(c);
}

DenseMatrix disk_stiffness(const PlaneWaveBasis& basis, double h) {
  require_uniform(basis, "disk_stiffness");
  const int p = basis.size();
  const double kappa = basis.kappa(), kh = kappa * h;
  std::vector<double> c(p);
  for (int k = 0; k < p; ++k) {
    const double x = kh * dir_a(k, p);
    c[k] = pi * kappa * kappa * h * (bessel_j(0, x) * std::cos(2 * pi * k / p) + bessel_j(2, x));
  }
  return circulant_from(c);
}

DenseMatrix disk_matrix(const PlaneWaveBasis& basis, double h, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Mass: return disk_mass(basis, h);
    case MatrixKind::Cross: return disk_cross(basis, h);
    case MatrixKind::Stiffness: return disk_stiffness(basis, h);
  }
  throw std::invalid_argument("disk_matrix: unknown kind");
}

DenseMatrix boundary_matrix(const PlaneWaveBasis& basis, const BoundaryRule& rule, MatrixKind kind) {
  const std::size_t p = basis.size();
  const std::size_t K = rule.size();
  std::vector<cd> values(K * p), fluxes;
  for (std::size_t k = 0; k < K; ++k) basis.phi_all(rule.points[k], values.data() + k * p);
  if (kind != MatrixKind::Mass) {
    fluxes.resize(K * p);
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t m = 0; m < p; ++m)
        fluxes[k * p + m] =
            cd{0.0, basis.kappa() * dot(basis.direction(static_cast<int>(m)), rule.normals[k])} * values[k * p + m];
  }
  DenseMatrix out(p);
  const auto& kt = kernels::active();
  switch (kind) {
    case MatrixKind::Mass: kt.weighted_gram(p, rule.weights, values, values, out.data()); break;
    case MatrixKind::Cross: kt.weighted_gram(p, rule.weights, values, fluxes, out.data()); break;
    case MatrixKind::Stiffness: kt.weighted_gram(p, rule.weights, fluxes, fluxes, out.data()); break;
  }
  out.flags.hermitian = kind != MatrixKind::Cross;
  return out;
}

int default_boundary_points(const PlaneWaveBasis& basis, const ElementGeometry& geom) {
  const double kh = basis.kappa() * geom.h();
  if (geom.is_disk()) {
    // Trapezoid on the circle: the integrands have Fourier content up to
    // about 2κh, plus a couple of harmonics from the flux factors.
    return std::max(64, static_cast<int>(std::ceil(32 + 4 * kh)));
  }
  // Plane-wave phases vary by up to κ·(2h) across an edge.
  const double reach = basis.kappa() * (geom.h() + norm(geom.center() - geom.centroid()));
  return default_points_per_edge(std::max(kh, reach));
}

DenseMatrix assemble_matrix(const PlaneWaveBasis& basis, const ElementGeometry& geom, MatrixKind kind,
                            const AssemblyOptions& opts) {
  const int n = opts.points_per_edge > 0 ? opts.points_per_edge : default_boundary_points(basis, geom);
  DenseMatrix A = boundary_matrix(basis, edge_quadrature(geom, n), kind);
  if (opts.self_check) {
    const DenseMatrix fine = boundary_matrix(basis, edge_quadrature(geom, 2 * n), kind);
    double d = rel_diff(A, fine);
    if (kind == MatrixKind::Cross) {
      // S can vanish identically (p = 1 gives ∫ d·n ds = 0), so measure the
      // change against the size of the integrand instead.
      const double bound = static_cast<double>(basis.size()) * geom.perimeter() * basis.kappa();
      d = (A - fine).frobenius() / bound;
    }
    if (!(d <= opts.check_tol))
      throw NumericalError("boundary quadrature under-resolved: refinement changed the matrix by " +
                           std::to_string(d));
  }
  return A;
}

DenseMatrix system_matrix(const DenseMatrix& M, const DenseMatrix& S, const DenseMatrix& D, double kappa) {
  if (M.size() != S.size() || M.size() != D.size()) throw std::invalid_argument("system_matrix: dimension mismatch");
  const std::size_t p = M.size();
  DenseMatrix A(p);
  const cd ik{0.0, kappa};
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < p; ++c)
      A(r, c) = kappa * kappa * M(r, c) + ik * (S(r, c) - std::conj(S(c, r))) + D(r, c);
  A.flags.hermitian = true;
  A.flags.circulant = M.flags.circulant && S.flags.circulant && D.flags.circulant;
  A.flags.real = M.flags.real && D.flags.real && S.flags.real && S.symmetric_defect() == 0.0;
  return A;
}

ElementMatrices element_matrices(const PlaneWaveBasis& basis, const ElementGeometry& geom,
                                 const AssemblyOptions& opts) {
  ElementMatrices e;
  const bool closed_form = geom.is_disk() && basis.is_uniform() && norm(geom.center() - basis.center()) == 0.0;
  if (closed_form) {
    e.M = disk_mass(basis, geom.h());
    e.S = disk_cross(basis, geom.h());
    e.D = disk_stiffness(basis, geom.h());
  } else {
    e.M = assemble_matrix(basis, geom, MatrixKind::Mass, opts);
    e.S = assemble_matrix(basis, geom, MatrixKind::Cross, opts);
    e.D = assemble_matrix(basis, geom, MatrixKind::Stiffness, opts);
  }
  e.SyS = system_matrix(e.M, e.S, e.D, basis.kappa());
  return e;
}

CVector impedance_rhs(const PlaneWaveBasis& basis, const BoundaryRule& rule, const BoundaryData& g) {
  const std::size_t p = basis.size();
  const double kappa = basis.kappa();
  CVector f(p);
  std::vector<cd> phi(p);
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const Vec2 x = rule.points[k], n = rule.normals[k];
    const cd gw = rule.weights[k] * g(x, n);
    if (gw == cd{}) continue;
    basis.phi_all(x, phi.data());
    for (std::size_t m = 0; m < p; ++m) {
      // τ_m = iκ(d_m·n + 1) φ_m
      const cd tau = cd{0.0, kappa * (dot(basis.direction(static_cast<int>(m)), n) + 1.0)} * phi[m];
      f[m] += gw * std::conj(tau);
    }
  }
  return f;
}

CVector impedance_rhs(const PlaneWaveBasis& basis, const ElementGeometry& geom, const BoundaryData& g,
                      const AssemblyOptions& opts) {
  const int n = opts.points_per_edge > 0 ? opts.points_per_edge : default_boundary_points(basis, geom);
  CVector f = impedance_rhs(basis, edge_quadrature(geom, n), g);
  if (opts.self_check) {
    const CVector fine = impedance_rhs(basis, edge_quadrature(geom, 2 * n), g);
    const double nf = norm2(fine);
    const double d = norm2(sub(f, fine)) / (nf > 0.0 ? nf : 1.0);
    if (!(d <= opts.check_tol))
      throw NumericalError("boundary quadrature under-resolved for the right-hand side: refinement changed it by " +
                           std::to_string(d));
  }
  return f;
}

}  // namespace trefftz
