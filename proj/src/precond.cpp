#include "trefftz/precond.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trefftz/circulant.hpp"
#include "trefftz/errors.hpp"
#include "trefftz/linalg.hpp"

namespace trefftz {

std::string_view to_string(PrecondKind k) {
  switch (k) {
    case PrecondKind::None: return "none";
    case PrecondKind::P1: return "P1";
    case PrecondKind::P2: return "P2";
    case PrecondKind::P3: return "P3";
    case PrecondKind::P4: return "P4";
    case PrecondKind::P5: return "P5";
    case PrecondKind::P6: return "P6";
    case PrecondKind::P7: return "P7";
  }
  return "?";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

CVector row_of(const DenseMatrix& a) { return CVector(a.data().begin(), a.data().begin() + a.size()); }

}  // namespace

PrecondKind parse_precond(std::string_view s) {
  const std::string t = lower(s);
  if (t == "none" || t == "identity" || t == "i") return PrecondKind::None;
  static constexpr PrecondKind kinds[] = {PrecondKind::P1, PrecondKind::P2, PrecondKind::P3, PrecondKind::P4,
                                          PrecondKind::P5, PrecondKind::P6, PrecondKind::P7};
  if (t.size() == 2 && t[0] == 'p' && t[1] >= '1' && t[1] <= '7') return kinds[t[1] - '1'];
  throw std::invalid_argument("unknown preconditioner '" + std::string(s) + "'");
}

std::string_view to_string(Side s) {
  switch (s) {
    case Side::None: return "none";
    case Side::Left: return "left";
    case Side::TwoSided: return "two-sided";
    case Side::Right: return "right";
  }
  return "?";
}

Side parse_side(std::string_view s) {
  const std::string t = lower(s);
  if (t == "none") return Side::None;
  if (t == "left") return Side::Left;
  if (t == "two-sided" || t == "twosided" || t == "left-right" || t == "both") return Side::TwoSided;
  if (t == "right") return Side::Right;
  throw std::invalid_argument("unknown preconditioning side '" + std::string(s) + "'");
}

PrecondContext make_precond_context(const PlaneWaveBasis& basis, const ElementGeometry& geom,
                                    const ElementMatrices& element) {
  PrecondContext ctx;
  ctx.kappa = basis.kappa();
  const double h = geom.h();
  const double k2 = basis.kappa() * basis.kappa();
  if (basis.is_uniform()) {
    // The Bessel series resolves eigenvalues far below rounding level, which
    // a DFT of the first row cannot; the thresholds in P1-P7 rely on that.
    const int p = static_cast<int>(basis.size());
    const auto mass = disk_spectrum(MatrixKind::Mass, p, basis.kappa(), h, SpectrumMethod::Series);
    const auto stiff = disk_spectrum(MatrixKind::Stiffness, p, basis.kappa(), h, SpectrumMethod::Series);
    ctx.mass_disk.resize(p);
    ctx.sys_disk.resize(p);
    for (int q = 0; q < p; ++q) {
      ctx.mass_disk[q] = mass[q];
      ctx.sys_disk[q] = k2 * mass[q] + stiff[q];
    }
  } else {
    // Fan-type direction sets: the disk matrices are no longer circulant,
    // so take them by quadrature and use their first rows like P3/P4 do.
    const ElementGeometry disk = ElementGeometry::disk(basis.center(), h);
    const DenseMatrix Md = assemble_matrix(basis, disk, MatrixKind::Mass);
    const DenseMatrix Dd = assemble_matrix(basis, disk, MatrixKind::Stiffness);
    ctx.mass_disk = dft_eigenvalues(row_of(Md));
    ctx.sys_disk = dft_eigenvalues(row_of(k2 * Md + Dd));
  }
  ctx.mass_first_row = circ_first_row(element.M).eigenvalues();
  ctx.mass_best = circ_best(element.M).eigenvalues();
  ctx.sys_first_row = circ_first_row(element.SyS).eigenvalues();
  return ctx;
}

namespace {

CVector inverse_root(const CVector& lam, double scale, PrecondKind kind) {
  CVector d(lam.size());
  for (std::size_t q = 0; q < lam.size(); ++q) {
    const cd l = scale * lam[q];
    if (std::abs(l) < 1e-300)
      throw SingularOperatorError(std::string(to_string(kind)) + ": eigenvalue " + std::to_string(q) +
                                  " is zero; use the regularized P6 or P7 instead");
    d[q] = 1.0 / std::sqrt(l);
  }
  return d;
}

}  // namespace

Preconditioner build_preconditioner(PrecondKind kind, const PrecondContext& ctx, double delta) {
  const double k2 = ctx.kappa * ctx.kappa;
  Preconditioner P;
  P.kind = kind;
  P.delta = delta;
  CVector d;
  switch (kind) {
    case PrecondKind::None: d.assign(ctx.mass_disk.size(), 1.0); break;
    case PrecondKind::P1: d = inverse_root(ctx.mass_disk, k2, kind); break;
    case PrecondKind::P2: d = inverse_root(ctx.sys_disk, 1.0, kind); break;
    case PrecondKind::P3: d = inverse_root(ctx.mass_first_row, k2, kind); break;
    case PrecondKind::P4: d = inverse_root(ctx.sys_first_row, 1.0, kind); break;
    case PrecondKind::P5: d = inverse_root(ctx.mass_best, k2, kind); break;
    case PrecondKind::P6:
    case PrecondKind::P7: {
      if (!(delta > 0.0)) throw std::invalid_argument("P6/P7 need a positive threshold delta");
      d.resize(ctx.mass_disk.size());
      for (std::size_t q = 0; q < d.size(); ++q) {
        const cd mu = ctx.mass_disk[q];
        const bool keep = kind == PrecondKind::P6 ? std::abs(mu) > delta : std::abs(mu) >= delta;
        if (keep)
          d[q] = 1.0 / std::sqrt(k2 * mu);
        else
          d[q] = kind == PrecondKind::P6 ? 1.0 : 0.0;
      }
      break;
    }
  }
  if (d.empty()) throw std::invalid_argument("preconditioner context is empty");
  P.rank = static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](cd z) { return z != cd{}; }));
  P.op = DiagonalizedOperator(std::move(d));
  return P;
}

Preconditioner identity_preconditioner(std::size_t p) {
  Preconditioner P;
  P.op = DiagonalizedOperator(CVector(p, 1.0));
  P.rank = p;
  return P;
}

DenseMatrix preconditioned_matrix(const DenseMatrix& P, const DenseMatrix& A, Side side) {
  if (side == Side::None) return A;
  if (P.size() != A.size()) throw std::invalid_argument("preconditioner and matrix sizes differ");
  switch (side) {
    case Side::Left: return P * A;
    case Side::TwoSided: return P * A * P;
    case Side::Right: return A * P;
    case Side::None: break;
  }
  return A;
}

DenseMatrix preconditioned_matrix(const Preconditioner& P, const DenseMatrix& A, Side side) {
  if (side == Side::None) return A;
  return preconditioned_matrix(P.materialize(), A, side);
}

double preconditioned_condition(const DenseMatrix& P, const DenseMatrix& A, Side side) {
  return cond2(preconditioned_matrix(P, A, side));
}

double preconditioned_condition(const Preconditioner& P, const DenseMatrix& A, Side side) {
  return cond2(preconditioned_matrix(P, A, side));
}

}  // namespace trefftz
