#pragma once

#include <functional>

#include "trefftz/basis.hpp"
#include "trefftz/dense.hpp"
#include "trefftz/geometry.hpp"

namespace trefftz {

// Orientation: row r is the test function, column c the trial function.
//   M[r][c] = ∫ φ_c conj(φ_r) ds
//   S[r][c] = ∫ φ_c conj(∂_n φ_r) ds
//   D[r][c] = ∫ ∂_n φ_c conj(∂_n φ_r) ds
// With this choice SyS = κ²M + iκ(S − S*) + D is exactly the Gram matrix of
// the impedance traces τ_m = ∂_n φ_m + iκ φ_m, hence Hermitian PSD.

enum class MatrixKind { Mass, Cross, Stiffness };

/// Closed forms on a disk of radius h centered at the basis center, for
/// equally spaced directions:
///   M = 2πh J_0(κh a),  S = −πκh a J_1(κh a),
///   D = πκ²h [J_0(κh a) cos(2π(m−ℓ)/p) + J_2(κh a)],  a = a(m−ℓ).
/// These are what the boundary integrals above evaluate to (one factor of h
/// from ds = h dt); the quadrature path reproduces them to rounding.
DenseMatrix disk_mass(const PlaneWaveBasis& basis, double h);
DenseMatrix disk_cross(const PlaneWaveBasis& basis, double h);
DenseMatrix disk_stiffness(const PlaneWaveBasis& basis, double h);
DenseMatrix disk_matrix(const PlaneWaveBasis& basis, double h, MatrixKind kind);

/// Boundary Gram matrix by an explicit quadrature rule (any geometry).
DenseMatrix boundary_matrix(const PlaneWaveBasis& basis, const BoundaryRule& rule, MatrixKind kind);

struct AssemblyOptions {
  int points_per_edge = 0;     ///< 0 selects a default from κh
  bool self_check = true;      ///< compare against a rule with twice the points
  double check_tol = 1e-8;     ///< relative Frobenius tolerance for the check
};

/// Points per edge (polygon) or total trapezoid points (disk) used when
/// AssemblyOptions::points_per_edge is 0.
int default_boundary_points(const PlaneWaveBasis& basis, const ElementGeometry& geom);

/// Quadrature assembly; throws NumericalError when the refinement check fails.
DenseMatrix assemble_matrix(const PlaneWaveBasis& basis, const ElementGeometry& geom, MatrixKind kind,
                            const AssemblyOptions& opts = {});

/// SyS = κ²M + iκ(S − S*) + D.
DenseMatrix system_matrix(const DenseMatrix& M, const DenseMatrix& S, const DenseMatrix& D, double kappa);

struct ElementMatrices {
  DenseMatrix M, S, D, SyS;
};

/// All four matrices. Uses the closed forms when the geometry is a disk
/// centered at the basis center and the directions are equally spaced,
/// quadrature otherwise.
ElementMatrices element_matrices(const PlaneWaveBasis& basis, const ElementGeometry& geom,
                                 const AssemblyOptions& opts = {});

/// Boundary data g(x, n).
using BoundaryData = std::function<cd(Vec2 x, Vec2 n)>;

/// f_r = ∫ g conj(∂_n φ_r + iκ φ_r) ds with an explicit rule.
CVector impedance_rhs(const PlaneWaveBasis& basis, const BoundaryRule& rule, const BoundaryData& g);

/// Same with the default rule and a refinement check.
CVector impedance_rhs(const PlaneWaveBasis& basis, const ElementGeometry& geom, const BoundaryData& g,
                      const AssemblyOptions& opts = {});

}  // namespace trefftz
