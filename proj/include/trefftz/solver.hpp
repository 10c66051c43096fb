#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "trefftz/dense.hpp"
#include "trefftz/precond.hpp"

namespace trefftz {

using LinearOp = std::function<CVector(std::span<const cd>)>;

enum class Method { Direct, Gmres };
std::string_view to_string(Method m);
Method parse_method(std::string_view s);

struct SolveConfig {
  Method method = Method::Gmres;
  Side side = Side::None;
  int restart = 5;
  double tol = 1e-6;
  int maxit = 0;  ///< total GMRES iterations; 0 means the system size
};

struct SolveReport {
  CVector x;
  /// Relative residual of the system actually iterated on: the initial value
  /// followed by one entry per GMRES iteration.
  std::vector<double> residuals;
  /// Index into `residuals` where each restart cycle begins.
  std::vector<std::size_t> cycle_starts;
  int iterations = 0;
  bool converged = false;
  bool breakdown = false;
  double precond_residual = 0.0;  ///< recomputed ‖b̃ − Ã x̃‖/‖b̃‖ of the iterated system
  double true_residual = 0.0;     ///< ‖f − SyS x‖/‖f‖ of the original system
};

/// Partial-pivot LU; throws SingularOperatorError on an exactly zero pivot.
SolveReport direct_solve(const DenseMatrix& A, std::span<const cd> b);

/// Restarted GMRES from x0 = 0 with modified Gram–Schmidt Arnoldi and Givens
/// rotations. Stops once the relative residual is <= tol, after maxit total
/// iterations, or on breakdown (Arnoldi norm < 1e-14‖b‖).
SolveReport gmres(const LinearOp& A, std::span<const cd> b, const SolveConfig& cfg);
SolveReport gmres(const DenseMatrix& A, std::span<const cd> b, const SolveConfig& cfg);

/// Solve SyS x = f with P applied on cfg.side:
///   left       P·SyS x = P f
///   two-sided  P·SyS·P y = P f,  x = P y
///   right      SyS·P y = f,      x = P y
/// P is only ever multiplied, never inverted, so singular P is allowed.
SolveReport solve_preconditioned(const DenseMatrix& SyS, std::span<const cd> f, const LinearOp& P,
                                 const SolveConfig& cfg);
SolveReport solve_preconditioned(const DenseMatrix& SyS, std::span<const cd> f, const Preconditioner& P,
                                 const SolveConfig& cfg);
SolveReport solve_preconditioned(const DenseMatrix& SyS, std::span<const cd> f, const DenseMatrix& P,
                                 const SolveConfig& cfg);

}  // namespace trefftz
