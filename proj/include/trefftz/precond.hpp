#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trefftz/circulant.hpp"
#include "trefftz/matrices.hpp"

namespace trefftz {

/// P1-P7 are inverse-square-root-type operators U diag(d) U*:
///   P1  (κ² M^disk)^{-1/2}            P2  (SyS^disk)^{-1/2}
///   P3  (κ² C_R(M^K))^{-1/2}           P4  (C_R(SyS^K))^{-1/2}
///   P5  (κ² C_best(M^K))^{-1/2}
///   P6  like P1 but eigenvalues with |μ| <= δ map to 1
///   P7  like P1 but eigenvalues with |μ| <  δ map to 0 (singular)
/// The disk matrices use the circumscribed disk of radius h about the basis
/// center. For direction sets that are not equally spaced every circulant
/// is taken from the first row. Complex eigenvalues take the principal
/// square root.
enum class PrecondKind { None, P1, P2, P3, P4, P5, P6, P7 };

std::string_view to_string(PrecondKind k);
/// "none"/"identity", "P1".."P7" (case-insensitive).
PrecondKind parse_precond(std::string_view s);

/// Spectral data the preconditioners are built from.
struct PrecondContext {
  double kappa = 1.0;
  CVector mass_disk;  ///< λ_q(M^disk)
  CVector sys_disk;   ///< λ_q(κ² M^disk + D^disk)
  CVector mass_first_row, mass_best, sys_first_row;  ///< λ_q of C_R(M^K), C_best(M^K), C_R(SyS^K)
};

PrecondContext make_precond_context(const PlaneWaveBasis& basis, const ElementGeometry& geom,
                                    const ElementMatrices& element);

struct Preconditioner {
  PrecondKind kind = PrecondKind::None;
  double delta = 0.0;
  DiagonalizedOperator op;
  std::size_t rank = 0;  ///< number of nonzero diagonal values

  std::size_t size() const { return op.size(); }
  CVector apply(std::span<const cd> v) const { return op.apply(v); }
  DenseMatrix materialize() const { return op.materialize(); }
};

constexpr double kDefaultDelta = 1e-10;

/// Throws SingularOperatorError when P1-P5 meet an eigenvalue with
/// |λ| < 1e-300, and std::invalid_argument for δ <= 0 with P6/P7.
Preconditioner build_preconditioner(PrecondKind kind, const PrecondContext& ctx, double delta = kDefaultDelta);

/// Identity of size p.
Preconditioner identity_preconditioner(std::size_t p);

enum class Side { None, Left, TwoSided, Right };
std::string_view to_string(Side s);
Side parse_side(std::string_view s);

/// The operator a Krylov method sees: P·A (left), P·A·P (two-sided),
/// A·P (right), or A.
DenseMatrix preconditioned_matrix(const DenseMatrix& P, const DenseMatrix& A, Side side);
DenseMatrix preconditioned_matrix(const Preconditioner& P, const DenseMatrix& A, Side side);

/// 2-norm condition number of preconditioned_matrix via dense SVD.
double preconditioned_condition(const DenseMatrix& P, const DenseMatrix& A, Side side);
double preconditioned_condition(const Preconditioner& P, const DenseMatrix& A, Side side);

}  // namespace trefftz
