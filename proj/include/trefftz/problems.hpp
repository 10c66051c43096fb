#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trefftz/basis.hpp"
#include "trefftz/geometry.hpp"
#include "trefftz/matrices.hpp"
#include "trefftz/precond.hpp"
#include "trefftz/solver.hpp"

namespace trefftz {

/// Sum of plane waves A e^{iκ d·x} and regular Bessel fields
/// A J_0(κ|x − p_0|); every term solves Δu + κ²u = 0.
class ExactSolution {
 public:
  struct PlaneTerm {
    double angle;
    cd amplitude;
  };
  struct BesselTerm {
    Vec2 source;
    cd amplitude;
  };

  explicit ExactSolution(double kappa) : kappa_(kappa) {}

  static ExactSolution plane_wave(double kappa, double angle, cd amplitude = 1.0);
  static ExactSolution bessel_point(double kappa, Vec2 source, cd amplitude = 1.0);

  ExactSolution& add_plane_wave(double angle, cd amplitude = 1.0);
  ExactSolution& add_bessel_point(Vec2 source, cd amplitude = 1.0);

  double kappa() const { return kappa_; }
  const std::vector<PlaneTerm>& plane_terms() const { return planes_; }
  const std::vector<BesselTerm>& bessel_terms() const { return bessels_; }

  cd value(Vec2 x) const;
  /// Analytic gradient; at a Bessel source the gradient's limit 0 is used.
  std::array<cd, 2> gradient(Vec2 x) const;
  /// ∇u·n + iκu
  cd impedance(Vec2 x, Vec2 n) const;

 private:
  double kappa_;
  std::vector<PlaneTerm> planes_;
  std::vector<BesselTerm> bessels_;
};

struct BoundaryFunction {
  BoundaryData g;
  /// Set when a Bessel source lies on ∂K, where the gradient limit is used.
  bool source_on_boundary = false;
};

BoundaryFunction boundary_data(const ExactSolution& u, const ElementGeometry& geom);

/// Area quadrature order used for L² norms when none is given.
int default_area_order(double kappa, const ElementGeometry& geom);

/// (∫_K |u − Σ x_m φ_m|²)^{1/2} / (∫_K |u|²)^{1/2}.
double l2_relative_error(const ExactSolution& u, std::span<const cd> x, const PlaneWaveBasis& basis,
                         const AreaRule& rule);
double l2_relative_error(const ExactSolution& u, std::span<const cd> x, const PlaneWaveBasis& basis,
                         const ElementGeometry& geom, int order = 0);

/// Direction family of the basis in a sweep.
struct DirectionFamily {
  bool fan = false;
  double alpha = 0.0;
  double beta = 0.0;

  PlaneWaveBasis make(int p, double kappa, Vec2 center) const;
};

struct ExperimentConfig {
  ExactSolution u{1.0};
  ElementGeometry geom = ElementGeometry::disk({0.0, 0.0}, 1.0);
  double kappa = 1.0;
  int p_min = 4;
  int p_max = 15;
  DirectionFamily directions;
  std::vector<PrecondKind> preconds{PrecondKind::None};
  std::vector<Side> sides{Side::Left};
  SolveConfig solve;  ///< method selects whether GMRES runs; maxit 0 means p
  double delta = kDefaultDelta;
  bool compute_condition = true;
  AssemblyOptions assembly;
};

struct ErrorReport {
  int p = 0;
  PrecondKind precond = PrecondKind::None;
  Side side = Side::None;
  double delta = 0.0;
  double tol = 0.0;
  double E_direct = 0.0;  ///< unpreconditioned direct solve
  double E_gmres = 0.0;   ///< NaN when GMRES was not run
  double cond = 0.0;      ///< 2-norm condition number of the iterated operator
  int iterations = 0;
  bool converged = false;
  double true_residual = 0.0;
  std::string error;      ///< non-empty when this cell failed
};

/// For each p: assemble, solve, measure E(p). A failing cell is recorded in
/// ErrorReport::error and the sweep continues. Rows are ordered by p, then
/// preconditioner, then side.
std::vector<ErrorReport> run_experiment(const ExperimentConfig& cfg);

}  // namespace trefftz
