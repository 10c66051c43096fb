#include "trefftz/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "trefftz/errors.hpp"
#include "trefftz/kernels.hpp"
#include "trefftz/special.hpp"

namespace trefftz {

using std::numbers::pi;

DftTwiddles::DftTwiddles(std::size_t p) : p_(p), w_(p * p), wc_(p * p) {
  if (p == 0) throw std::invalid_argument("DFT size must be positive");
  for (std::size_t q = 0; q < p; ++q)
    for (std::size_t j = 0; j < p; ++j) {
      // Reduce qj mod p first so the angle stays in [0, 2π).
      const double t = 2 * pi * static_cast<double>((q * j) % p) / static_cast<double>(p);
      w_[q * p + j] = {std::cos(t), -std::sin(t)};
      wc_[q * p + j] = {std::cos(t), std::sin(t)};
    }
}

CVector DftTwiddles::forward(std::span<const cd> x) const {
  if (x.size() != p_) throw std::invalid_argument("DFT: dimension mismatch");
  CVector y(p_);
  kernels::active().gemv(w_, x, y);
  return y;
}

CVector DftTwiddles::backward(std::span<const cd> x) const {
  if (x.size() != p_) throw std::invalid_argument("DFT: dimension mismatch");
  CVector y(p_);
  kernels::active().gemv(wc_, x, y);
  return y;
}

namespace {

std::shared_ptr<const DftTwiddles> twiddles(std::size_t p) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const DftTwiddles>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = std::make_shared<const DftTwiddles>(p);
  return slot;
}

}  // namespace

DenseMatrix unitary_dft(std::size_t p) {
  if (p == 0) throw std::invalid_argument("unitary_dft: p must be positive");
  DenseMatrix U(p);
  const double s = 1.0 / std::sqrt(static_cast<double>(p));
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t q = 0; q < p; ++q) {
      const double t = 2 * pi * static_cast<double>((q * j) % p) / static_cast<double>(p);
      U(j, q) = s * cd{std::cos(t), -std::sin(t)};
    }
  return U;
}

DiagonalizedOperator::DiagonalizedOperator(CVector diag) : d_(std::move(diag)) {
  if (d_.empty()) throw std::invalid_argument("DiagonalizedOperator: empty diagonal");
  tw_ = twiddles(d_.size());
}

CVector DiagonalizedOperator::apply(std::span<const cd> x) const {
  if (x.size() != d_.size()) throw std::invalid_argument("DiagonalizedOperator::apply: dimension mismatch");
  // U diag(d) U* x = W diag(d) conj(W) x / p
  CVector y = tw_->backward(x);
  const double inv_p = 1.0 / static_cast<double>(d_.size());
  for (std::size_t q = 0; q < y.size(); ++q) y[q] *= d_[q] * inv_p;
  return tw_->forward(y);
}

DenseMatrix DiagonalizedOperator::materialize() const {
  const std::size_t p = d_.size();
  const DenseMatrix U = unitary_dft(p);
  DenseMatrix A(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      cd s{};
      for (std::size_t q = 0; q < p; ++q) s += U(i, q) * d_[q] * std::conj(U(j, q));
      A(i, j) = s;
    }
  A.flags.circulant = true;
  return A;
}

CVector dft_eigenvalues(std::span<const cd> first_row) {
  if (first_row.empty()) throw std::invalid_argument("dft_eigenvalues: empty row");
  return twiddles(first_row.size())->forward(first_row);
}

CirculantOperator::CirculantOperator(CVector first_row) : row_(std::move(first_row)) {
  if (row_.empty()) throw std::invalid_argument("circulant: first row is empty");
  op_ = DiagonalizedOperator(dft_eigenvalues(row_));
}

DenseMatrix CirculantOperator::materialize() const {
  const std::size_t p = row_.size();
  DenseMatrix C(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) C(i, j) = row_[(j + p - i) % p];
  C.flags.circulant = true;
  bool herm = true, real = true;
  for (std::size_t k = 0; k < p; ++k) {
    real = real && row_[k].imag() == 0.0;
    herm = herm && row_[k] == std::conj(row_[(p - k) % p]);
  }
  C.flags.real = real;
  C.flags.hermitian = herm;
  return C;
}

CVector CirculantOperator::apply_inverse(std::span<const cd> x) const {
  CVector inv(size());
  for (std::size_t q = 0; q < size(); ++q) {
    const cd l = eigenvalues()[q];
    if (std::abs(l) < 1e-300) throw SingularOperatorError("circulant inverse: eigenvalue " + std::to_string(q) + " is zero");
    inv[q] = 1.0 / l;
  }
  return DiagonalizedOperator(std::move(inv)).apply(x);
}

DenseMatrix toeplitz_average(const DenseMatrix& a) {
  const std::size_t p = a.size();
  const long n = static_cast<long>(p);
  std::vector<cd> mean(2 * p);  // index k + p - 1 for k = i - j in (-p, p)
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) mean[i + p - 1 - j] += a(i, j);
  for (long k = 1 - n; k < n; ++k) mean[k + n - 1] /= static_cast<double>(n - std::abs(k));
  DenseMatrix t(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) t(i, j) = mean[i + p - 1 - j];
  t.flags.hermitian = a.flags.hermitian;
  t.flags.real = a.flags.real;
  return t;
}

CirculantOperator circ_first_row(const DenseMatrix& a) {
  const std::size_t p = a.size();
  if (p == 0) throw std::invalid_argument("circ_first_row: empty matrix");
  CVector row(p);
  for (std::size_t j = 0; j < p; ++j) row[j] = a(0, j);
  return CirculantOperator(std::move(row));
}

CirculantOperator circ_best(const DenseMatrix& a) {
  const std::size_t p = a.size();
  if (p == 0) throw std::invalid_argument("circ_best: empty matrix");
  CVector row(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) row[(j + p - i) % p] += a(i, j);
  for (cd& c : row) c /= static_cast<double>(p);
  return CirculantOperator(std::move(row));
}

double delta_measure(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("delta_measure: dimension mismatch");
  const double nb = b.frobenius();
  if (nb == 0.0) throw std::invalid_argument("delta_measure: reference matrix is zero");
  return (a - b).frobenius() / (static_cast<double>(a.size()) * nb);
}

std::string_view to_string(SpectrumMethod m) {
  switch (m) {
    case SpectrumMethod::Dft: return "dft";
    case SpectrumMethod::Integral: return "integral";
    case SpectrumMethod::Asymptotic: return "asymptotic";
    case SpectrumMethod::Series: return "series";
  }
  return "?";
}

std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::Mass: return "M";
    case MatrixKind::Cross: return "S";
    case MatrixKind::Stiffness: return "D";
  }
  return "?";
}

namespace {

constexpr int kTrapezoidPoints = 4096;

// J_k(x) for k = 0..nmax at a signed argument.
std::vector<double> bessel_signed(int nmax, double x) {
  std::vector<double> j = bessel_j_range(nmax, std::abs(x));
  if (x < 0)
    for (int k = 1; k <= nmax; k += 2) j[k] = -j[k];
  return j;
}

std::vector<double> spectrum_integral(MatrixKind which, int p, double kappa, double h) {
  const double kh = kappa * h;
  const double B = 2 * kh;
  const int half = p / 2;
  const int nmax = 2 * half + 2;
  std::vector<double> acc(half + 1, 0.0);
  const double dt = 2 * pi / kTrapezoidPoints;
  for (int k = 0; k < kTrapezoidPoints; ++k) {
    const double t = k * dt;
    const double st = std::sin(t);
    const std::vector<double> J = bessel_signed(nmax, B * st);
    for (int L = 0; L <= half; ++L) {
      double v = 0.0;
      switch (which) {
        case MatrixKind::Mass: v = J[2 * L]; break;
        case MatrixKind::Cross: v = st * J[1] * std::cos(2.0 * L * t); break;
        case MatrixKind::Stiffness: {
          const double jm = J[std::abs(2 * L - 2)];  // J_{-2} = J_2
          v = 0.5 * (J[2 * L + 2] + jm) + J[2 * L] * std::cos(2 * t);
          break;
        }
      }
      acc[L] += v * dt;
    }
  }
  double pref = 0.0;
  switch (which) {
    case MatrixKind::Mass: pref = h * p; break;
    case MatrixKind::Cross: pref = -p * kappa * h; break;
    case MatrixKind::Stiffness: pref = 0.5 * p * kappa * kappa * h; break;
  }
  std::vector<double> out(p);
  for (int L = 0; L < p; ++L) out[L] = pref * acc[std::min(L, p - L)];
  return out;
}

std::vector<double> spectrum_series(MatrixKind which, int p, double kappa, double h) {
  const double kh = kappa * h;
  const int nmax = std::max(2 * p, static_cast<int>(std::ceil(kh)) + 60) + p;
  const std::vector<double> J = bessel_j_range(nmax + 1, kh);
  auto deriv = [&](int n) { return n == 0 ? -J[1] : 0.5 * (J[n - 1] - J[n + 1]); };
  // Terms depend on |n| only; J_{-n}² = J_n², J_{-n}J'_{-n} = J_n J'_n.
  std::vector<double> term(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    switch (which) {
      case MatrixKind::Mass: term[n] = J[n] * J[n]; break;
      case MatrixKind::Cross: term[n] = J[n] * deriv(n); break;
      case MatrixKind::Stiffness: term[n] = deriv(n) * deriv(n); break;
    }
  }
  double pref = 2 * pi * h * p;
  if (which == MatrixKind::Cross) pref *= kappa;
  if (which == MatrixKind::Stiffness) pref *= kappa * kappa;
  std::vector<double> out(p, 0.0);
  for (int L = 0; L < p; ++L) {
    // n = L + jp over all integers j: |n| runs through L, L+p, ... and
    // p-L, 2p-L, ...
    double s = 0.0;
    for (int n = L; n <= nmax; n += p) s += term[n];
    for (int n = p - L; n <= nmax; n += p) s += term[n];
    out[L] = pref * s;
  }
  return out;
}

}  // namespace

std::vector<double> disk_spectrum(MatrixKind which, int p, double kappa, double h, SpectrumMethod method) {
  if (p < 1) throw std::invalid_argument("disk_spectrum: p must be >= 1");
  if (!(kappa > 0.0) || !(h > 0.0)) throw std::invalid_argument("disk_spectrum: kappa and h must be positive");
  switch (method) {
    case SpectrumMethod::Dft: {
      const PlaneWaveBasis basis = PlaneWaveBasis::uniform(p, kappa);
      const DenseMatrix A = disk_matrix(basis, h, which);
      CVector row(A.data().begin(), A.data().begin() + p);
      const CVector lam = dft_eigenvalues(row);
      std::vector<double> out(p);
      for (int q = 0; q < p; ++q) out[q] = lam[q].real();
      return out;
    }
    case SpectrumMethod::Integral: return spectrum_integral(which, p, kappa, h);
    case SpectrumMethod::Asymptotic: {
      if (which != MatrixKind::Mass) throw std::invalid_argument("asymptotic spectrum is only defined for the mass matrix");
      std::vector<double> out(p);
      const double kh = kappa * h;
      for (int L = 0; L < p; ++L) {
        const int s = std::min(L, p - L);
        out[L] = std::exp(std::log(2 * pi * h * p) + 2.0 * s * std::log(kh) - ln_gamma(2.0 * s + 1.0));
      }
      return out;
    }
    case SpectrumMethod::Series: return spectrum_series(which, p, kappa, h);
  }
  throw std::invalid_argument("disk_spectrum: unknown method");
}

std::vector<SpectrumRow> spectrum_report(MatrixKind which, int p, double kappa, double h) {
  const PlaneWaveBasis basis = PlaneWaveBasis::uniform(p, kappa);
  const DenseMatrix A = disk_matrix(basis, h, which);
  const CVector dft = dft_eigenvalues(CVector(A.data().begin(), A.data().begin() + p));
  const auto integral = disk_spectrum(which, p, kappa, h, SpectrumMethod::Integral);
  const auto series = disk_spectrum(which, p, kappa, h, SpectrumMethod::Series);
  std::vector<double> asym(p, std::numeric_limits<double>::quiet_NaN());
  if (which == MatrixKind::Mass) asym = disk_spectrum(which, p, kappa, h, SpectrumMethod::Asymptotic);
  std::vector<SpectrumRow> rows;
  rows.reserve(p);
  for (int L = 0; L < p; ++L) rows.push_back({L, dft[L], integral[L], asym[L], series[L], (p - L) % p});
  return rows;
}

ConditionEstimate disk_condition_estimate(MatrixKind which, int p, double kappa, double h, SpectrumMethod method) {
  if (which == MatrixKind::Cross) throw std::invalid_argument("condition estimate is defined for M and D only");
  const auto lam = disk_spectrum(which, p, kappa, h, method);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double l : lam) {
    lo = std::min(lo, std::abs(l));
    hi = std::max(hi, std::abs(l));
  }
  ConditionEstimate e{};
  e.lambda_min = lo;
  e.lambda_max = hi;
  e.cond = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  const double kh = kappa * h;
  if (which == MatrixKind::Mass)
    e.log_proxy = ln_gamma(p + 1.0) - p * std::log(kh) - std::log(2 * pi * h * p);
  else
    e.log_proxy = ln_gamma(p + 3.0) - (p + 2.0) * std::log(kh);
  return e;
}

DenseMatrix cyclic_best_limit(const CyclicAngles& angles, const PlaneWaveBasis& basis, int points_per_edge) {
  angles.validate();
  if (!basis.is_uniform()) throw std::invalid_argument("cyclic_best_limit: needs equally spaced directions");
  const int p = basis.size();
  const double kappa = basis.kappa();
  const int n = points_per_edge > 0 ? points_per_edge : default_points_per_edge(kappa * angles.h) * 2;
  const GaussRule gl = gauss_legendre(n);
  const std::size_t L = angles.theta.size();
  std::vector<double> c(p, 0.0);
  for (std::size_t j = 0; j < L; ++j) {
    const double t0 = angles.theta[j];
    const double t1 = j + 1 < L ? angles.theta[j + 1] : angles.theta[0] + 2 * pi;
    const double half = 0.5 * (t1 - t0);
    for (int q = 0; q < n; ++q) {
      const double t = t0 + half * (1.0 + gl.nodes[q]);
      const RadialPoint rp = radial_param(angles, j, t);
      const double w = half * gl.weights[q] * rp.g;
      for (int k = 0; k < p; ++k) c[k] += w * bessel_j(0, kappa * rp.r * dir_a(k, p));
    }
  }
  DenseMatrix A(p);
  for (int i = 0; i < p; ++i)
    for (int l = 0; l < p; ++l) A(i, l) = c[(l - i + p) % p];
  A.flags = {true, true, true};
  return A;
}

}  // namespace trefftz
