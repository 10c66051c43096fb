#include "trefftz/solver.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trefftz/kernels.hpp"
#include "trefftz/linalg.hpp"

namespace trefftz {

std::string_view to_string(Method m) { return m == Method::Direct ? "direct" : "gmres"; }

Method parse_method(std::string_view s) {
  std::string t(s);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "direct") return Method::Direct;
  if (t == "gmres") return Method::Gmres;
  throw std::invalid_argument("unknown solve method '" + std::string(s) + "'");
}

namespace {

double relative(double r, double bnorm) { return bnorm > 0.0 ? r / bnorm : r; }

void validate(const SolveConfig& cfg) {
  if (cfg.restart < 1) throw std::invalid_argument("GMRES restart must be >= 1");
  if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw std::invalid_argument("GMRES tolerance must lie in (0, 1)");
  if (cfg.maxit < 0) throw std::invalid_argument("GMRES maxit must be non-negative");
}

// Complex Givens rotation [c s; -conj(s) c] with real c zeroing b in (a, b).
void givens(cd a, cd b, double& c, cd& s) {
  const double na = std::abs(a), nb = std::abs(b);
  if (nb == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (na == 0.0) {
    c = 0.0;
    s = std::conj(b) / nb;
    return;
  }
  const double r = std::hypot(na, nb);
  c = na / r;
  s = (a / na) * std::conj(b) / r;
}

}  // namespace

SolveReport direct_solve(const DenseMatrix& A, std::span<const cd> b) {
  if (A.size() != b.size()) throw std::invalid_argument("direct_solve: dimension mismatch");
  SolveReport rep;
  const LuFactorization lu(A);
  rep.x = lu.solve(b);
  const double bnorm = norm2(b);
  rep.precond_residual = relative(norm2(sub(b, A.apply(rep.x))), bnorm);
  rep.true_residual = rep.precond_residual;
  rep.residuals = {rep.precond_residual};
  rep.cycle_starts = {0};
  rep.converged = true;
  return rep;
}

SolveReport gmres(const LinearOp& A, std::span<const cd> b, const SolveConfig& cfg) {
  validate(cfg);
  const std::size_t n = b.size();
  const int maxit = cfg.maxit > 0 ? cfg.maxit : static_cast<int>(n);
  const int m = cfg.restart;
  const auto& k = kernels::active();

  SolveReport rep;
  rep.x.assign(n, 0.0);
  const double bnorm = norm2(b);
  if (bnorm == 0.0) {
    rep.residuals = {0.0};
    rep.cycle_starts = {0};
    rep.converged = true;
    return rep;
  }

  CVector r(b.begin(), b.end());
  double beta = bnorm;
  rep.residuals.push_back(1.0);

  std::vector<CVector> V(m + 1, CVector(n));
  std::vector<cd> H((m + 1) * m);  // column-major-ish: H[i + j*(m+1)]
  auto h = [&](int i, int j) -> cd& { return H[i + j * (m + 1)]; };
  std::vector<double> cs(m);
  std::vector<cd> sn(m), g(m + 1);

  while (true) {
    rep.cycle_starts.push_back(rep.residuals.size() - 1);
    std::fill(H.begin(), H.end(), cd{});
    std::fill(g.begin(), g.end(), cd{});
    g[0] = beta;
    for (std::size_t i = 0; i < n; ++i) V[0][i] = r[i] / beta;

    int used = 0;
    bool done = false;
    for (int j = 0; j < m && rep.iterations < maxit; ++j) {
      CVector w = A(V[j]);
      if (w.size() != n) throw std::invalid_argument("GMRES: operator returned a vector of the wrong size");
      for (int i = 0; i <= j; ++i) {
        const cd hij = k.dotc(V[i], w);
        h(i, j) = hij;
        k.axpy(-hij, V[i], w);
      }
      const double hnext = norm2(w);
      h(j + 1, j) = hnext;

      for (int i = 0; i < j; ++i) {
        const cd t = cs[i] * h(i, j) + sn[i] * h(i + 1, j);
        h(i + 1, j) = -std::conj(sn[i]) * h(i, j) + cs[i] * h(i + 1, j);
        h(i, j) = t;
      }
      givens(h(j, j), h(j + 1, j), cs[j], sn[j]);
      h(j, j) = cs[j] * h(j, j) + sn[j] * h(j + 1, j);
      h(j + 1, j) = 0.0;
      g[j + 1] = -std::conj(sn[j]) * g[j];
      g[j] = cs[j] * g[j];

      ++rep.iterations;
      used = j + 1;
      const double res = std::abs(g[j + 1]);
      rep.residuals.push_back(res / bnorm);

      if (res <= cfg.tol * bnorm) {
        done = true;
        break;
      }
      if (hnext < 1e-14 * bnorm) {
        rep.breakdown = true;
        done = true;
        break;
      }
      for (std::size_t i = 0; i < n; ++i) V[j + 1][i] = w[i] / hnext;
    }

    // Back substitution for the least-squares coefficients.
    std::vector<cd> y(used);
    for (int i = used - 1; i >= 0; --i) {
      cd s = g[i];
      for (int l = i + 1; l < used; ++l) s -= h(i, l) * y[l];
      y[i] = h(i, i) == cd{} ? cd{} : s / h(i, i);
    }
    for (int i = 0; i < used; ++i) k.axpy(y[i], V[i], rep.x);

    const CVector Ax = A(rep.x);
    r = sub(b, Ax);
    beta = norm2(r);
    const bool small = beta <= cfg.tol * bnorm;
    if (small || done || rep.iterations >= maxit || beta == 0.0) {
      rep.converged = small;
      break;
    }
  }
  rep.precond_residual = beta / bnorm;
  rep.true_residual = rep.precond_residual;
  return rep;
}

SolveReport gmres(const DenseMatrix& A, std::span<const cd> b, const SolveConfig& cfg) {
  return gmres([&A](std::span<const cd> v) { return A.apply(v); }, b, cfg);
}

SolveReport solve_preconditioned(const DenseMatrix& SyS, std::span<const cd> f, const LinearOp& P,
                                 const SolveConfig& cfg) {
  if (SyS.size() != f.size()) throw std::invalid_argument("solve: dimension mismatch");
  const auto A = [&SyS](std::span<const cd> v) { return SyS.apply(v); };
  const std::size_t n = f.size();

  LinearOp op;
  CVector rhs;
  bool post_apply = false;
  switch (cfg.side) {
    case Side::None:
      op = A;
      rhs.assign(f.begin(), f.end());
      break;
    case Side::Left:
      op = [&](std::span<const cd> v) { return P(A(v)); };
      rhs = P(f);
      break;
    case Side::TwoSided:
      op = [&](std::span<const cd> v) { return P(A(P(v))); };
      rhs = P(f);
      post_apply = true;
      break;
    case Side::Right:
      op = [&](std::span<const cd> v) { return A(P(v)); };
      rhs.assign(f.begin(), f.end());
      post_apply = true;
      break;
  }

  SolveReport rep;
  if (cfg.method == Method::Direct) {
    // Materialize the iterated operator column by column.
    DenseMatrix Op(n);
    CVector e(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(e.begin(), e.end(), cd{});
      e[j] = 1.0;
      const CVector col = op(e);
      for (std::size_t i = 0; i < n; ++i) Op(i, j) = col[i];
    }
    rep = direct_solve(Op, rhs);
  } else {
    rep = gmres(op, rhs, cfg);
  }
  if (post_apply) rep.x = P(rep.x);
  const double fnorm = norm2(f);
  rep.true_residual = relative(norm2(sub(f, SyS.apply(rep.x))), fnorm);
  return rep;
}

SolveReport solve_preconditioned(const DenseMatrix& SyS, std::span<const cd> f, const Preconditioner& P,
                                 const SolveConfig& cfg) {
  return solve_preconditioned(SyS, f, LinearOp([&P](std::span<const cd> v) { return P.apply(v); }), cfg);
}

SolveReport solve_preconditioned(const DenseMatrix& SyS, std::span<const cd> f, const DenseMatrix& P,
                                 const SolveConfig& cfg) {
  return solve_preconditioned(SyS, f, LinearOp([&P](std::span<const cd> v) { return P.apply(v); }), cfg);
}

}  // namespace trefftz
