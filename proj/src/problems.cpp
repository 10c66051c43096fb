#include "trefftz/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trefftz/errors.hpp"
#include "trefftz/linalg.hpp"
#include "trefftz/special.hpp"

namespace trefftz {

ExactSolution ExactSolution::plane_wave(double kappa, double angle, cd amplitude) {
  ExactSolution u(kappa);
  u.add_plane_wave(angle, amplitude);
  return u;
}

ExactSolution ExactSolution::bessel_point(double kappa, Vec2 source, cd amplitude) {
  ExactSolution u(kappa);
  u.add_bessel_point(source, amplitude);
  return u;
}

ExactSolution& ExactSolution::add_plane_wave(double angle, cd amplitude) {
  planes_.push_back({angle, amplitude});
  return *this;
}

ExactSolution& ExactSolution::add_bessel_point(Vec2 source, cd amplitude) {
  bessels_.push_back({source, amplitude});
  return *this;
}

cd ExactSolution::value(Vec2 x) const {
  cd u{};
  for (const auto& t : planes_) {
    const double arg = kappa_ * (std::cos(t.angle) * x.x + std::sin(t.angle) * x.y);
    u += t.amplitude * cd{std::cos(arg), std::sin(arg)};
  }
  for (const auto& t : bessels_) u += t.amplitude * bessel_j(0, kappa_ * norm(x - t.source));
  return u;
}

std::array<cd, 2> ExactSolution::gradient(Vec2 x) const {
  std::array<cd, 2> g{};
  for (const auto& t : planes_) {
    const double dx = std::cos(t.angle), dy = std::sin(t.angle);
    const double arg = kappa_ * (dx * x.x + dy * x.y);
    const cd v = cd{0.0, kappa_} * t.amplitude * cd{std::cos(arg), std::sin(arg)};
    g[0] += v * dx;
    g[1] += v * dy;
  }
  for (const auto& t : bessels_) {
    const Vec2 d = x - t.source;
    const double r = norm(d);
    if (r == 0.0) continue;  // ∇J_0(κr) → 0 as r → 0
    const cd s = -kappa_ * bessel_j(1, kappa_ * r) / r * t.amplitude;
    g[0] += s * d.x;
    g[1] += s * d.y;
  }
  return g;
}

cd ExactSolution::impedance(Vec2 x, Vec2 n) const {
  const auto g = gradient(x);
  return g[0] * n.x + g[1] * n.y + cd{0.0, kappa_} * value(x);
}

BoundaryFunction boundary_data(const ExactSolution& u, const ElementGeometry& geom) {
  BoundaryFunction out;
  const double tol = 1e-12 * std::max(1.0, geom.h());
  for (const auto& t : u.bessel_terms()) {
    if (geom.is_disk()) {
      out.source_on_boundary |= std::abs(norm(t.source - geom.center()) - geom.h()) <= tol;
      continue;
    }
    for (std::size_t j = 0; j < geom.edge_count(); ++j) {
      const Vec2 a = geom.edge_start(j), b = geom.edge_end(j);
      const Vec2 e = b - a;
      const double s = std::clamp(dot(t.source - a, e) / dot(e, e), 0.0, 1.0);
      if (norm(t.source - (a + s * e)) <= tol) out.source_on_boundary = true;
    }
  }
  out.g = [u](Vec2 x, Vec2 n) { return u.impedance(x, n); };
  return out;
}

int default_area_order(double kappa, const ElementGeometry& geom) {
  const double reach = kappa * (geom.h() + norm(geom.center() - geom.centroid()));
  return std::max(16, static_cast<int>(std::ceil(10 + 2 * reach)));
}

double l2_relative_error(const ExactSolution& u, std::span<const cd> x, const PlaneWaveBasis& basis,
                         const AreaRule& rule) {
  if (x.size() != static_cast<std::size_t>(basis.size()))
    throw std::invalid_argument("l2_relative_error: coefficient count differs from basis size");
  std::vector<cd> phi(basis.size());
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    basis.phi_all(rule.points[k], phi.data());
    cd up{};
    for (std::size_t m = 0; m < phi.size(); ++m) up += x[m] * phi[m];
    const cd ue = u.value(rule.points[k]);
    num += rule.weights[k] * std::norm(ue - up);
    den += rule.weights[k] * std::norm(ue);
  }
  if (!(den > 0.0)) throw std::invalid_argument("l2_relative_error: exact solution has zero L2 norm");
  return std::sqrt(num / den);
}

double l2_relative_error(const ExactSolution& u, std::span<const cd> x, const PlaneWaveBasis& basis,
                         const ElementGeometry& geom, int order) {
  const int n = order > 0 ? order : default_area_order(basis.kappa(), geom);
  return l2_relative_error(u, x, basis, area_quadrature(geom, n));
}

PlaneWaveBasis DirectionFamily::make(int p, double kappa, Vec2 center) const {
  if (fan) return PlaneWaveBasis::fan(p, kappa, center, alpha, beta);
  return PlaneWaveBasis::uniform(p, kappa, center);
}

std::vector<ErrorReport> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.p_min < 1 || cfg.p_max < cfg.p_min) throw std::invalid_argument("run_experiment: empty p range");
  if (cfg.preconds.empty()) throw std::invalid_argument("run_experiment: no preconditioners given");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const BoundaryFunction g = boundary_data(cfg.u, cfg.geom);
  const AreaRule area = area_quadrature(cfg.geom, default_area_order(cfg.kappa, cfg.geom));

  std::vector<ErrorReport> rows;
  for (int p = cfg.p_min; p <= cfg.p_max; ++p) {
    ErrorReport base;
    base.p = p;
    base.delta = cfg.delta;
    base.tol = cfg.solve.tol;
    base.E_direct = nan;
    base.E_gmres = nan;
    base.cond = nan;
    base.true_residual = nan;

    std::optional<PlaneWaveBasis> basis;
    ElementMatrices em;
    CVector f;
    try {
      basis.emplace(cfg.directions.make(p, cfg.kappa, cfg.geom.center()));
      em = element_matrices(*basis, cfg.geom, cfg.assembly);
      f = impedance_rhs(*basis, cfg.geom, g.g, cfg.assembly);
      const SolveReport direct = direct_solve(em.SyS, f);
      base.E_direct = l2_relative_error(cfg.u, direct.x, *basis, area);
    } catch (const std::exception& e) {
      base.error = e.what();
    }

    std::optional<PrecondContext> ctx;
    std::string ctx_error;
    if (basis && base.error.empty()) {
      try {
        ctx = make_precond_context(*basis, cfg.geom, em);
      } catch (const std::exception& e) {
        ctx_error = e.what();
      }
    }

    for (PrecondKind kind : cfg.preconds) {
      std::vector<Side> sides = cfg.sides;
      if (kind == PrecondKind::None || sides.empty()) sides = {Side::None};
      for (Side side : sides) {
        ErrorReport row = base;
        row.precond = kind;
        row.side = kind == PrecondKind::None ? Side::None : side;
        if (!row.error.empty()) {
          rows.push_back(row);
          continue;
        }
        try {
          Preconditioner P = identity_preconditioner(p);
          if (kind != PrecondKind::None) {
            if (!ctx) throw std::invalid_argument(ctx_error.empty() ? "no preconditioner context" : ctx_error);
            P = build_preconditioner(kind, *ctx, cfg.delta);
          }
          if (cfg.compute_condition) row.cond = preconditioned_condition(P, em.SyS, row.side);
          if (cfg.solve.method == Method::Gmres) {
            SolveConfig sc = cfg.solve;
            sc.side = row.side;
            const SolveReport rep = solve_preconditioned(em.SyS, f, P, sc);
            row.E_gmres = l2_relative_error(cfg.u, rep.x, *basis, area);
            row.iterations = rep.iterations;
            row.converged = rep.converged;
            row.true_residual = rep.true_residual;
          }
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace trefftz
