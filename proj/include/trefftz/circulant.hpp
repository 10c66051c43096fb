#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "trefftz/basis.hpp"
#include "trefftz/dense.hpp"
#include "trefftz/geometry.hpp"
#include "trefftz/matrices.hpp"

namespace trefftz {

/// Unnormalized DFT matrix W_{qj} = exp(-2πi qj/p). It is symmetric, and
/// U = W/√p is the unitary matrix whose q-th column is the eigenvector
/// v_q = [1, e^{-iθ_q}, ..., e^{-i(p-1)θ_q}]ᵀ/√p of every p×p circulant.
class DftTwiddles {
 public:
  explicit DftTwiddles(std::size_t p);
  std::size_t size() const { return p_; }
  /// y = W x
  CVector forward(std::span<const cd> x) const;
  /// y = conj(W) x
  CVector backward(std::span<const cd> x) const;

 private:
  std::size_t p_;
  std::vector<cd> w_, wc_;
};

/// U with columns v_q / √p.
DenseMatrix unitary_dft(std::size_t p);

/// x ↦ U diag(d) U* x.
class DiagonalizedOperator {
 public:
  DiagonalizedOperator() = default;
  explicit DiagonalizedOperator(CVector diag);

  std::size_t size() const { return d_.size(); }
  const CVector& diag() const { return d_; }
  CVector apply(std::span<const cd> x) const;
  DenseMatrix materialize() const;

 private:
  CVector d_;
  std::shared_ptr<const DftTwiddles> tw_;
};

/// C_{ij} = c_{(j-i) mod p}; eigenvalues λ_q = Σ_j c_j e^{-ijθ_q}.
class CirculantOperator {
 public:
  explicit CirculantOperator(CVector first_row);

  std::size_t size() const { return row_.size(); }
  const CVector& first_row() const { return row_; }
  const CVector& eigenvalues() const { return op_.diag(); }

  DenseMatrix materialize() const;
  /// C x through the eigenbasis.
  CVector apply(std::span<const cd> x) const { return op_.apply(x); }
  /// C^{-1} x; throws SingularOperatorError if some |λ_q| < 1e-300.
  CVector apply_inverse(std::span<const cd> x) const;

 private:
  CVector row_;
  DiagonalizedOperator op_;
};

/// λ_q = Σ_j c_j e^{-2πi qj/p}.
CVector dft_eigenvalues(std::span<const cd> first_row);

/// Mean of each diagonal i - j = k (divisor p - |k|).
DenseMatrix toeplitz_average(const DenseMatrix& a);
/// circ[a_{0,0}, a_{0,1}, ..., a_{0,p-1}]
CirculantOperator circ_first_row(const DenseMatrix& a);
/// Average of a over each residue class of (j - i) mod p.
CirculantOperator circ_best(const DenseMatrix& a);
/// ‖A − B‖_F / (p ‖B‖_F)
double delta_measure(const DenseMatrix& a, const DenseMatrix& b);

enum class SpectrumMethod { Dft, Integral, Asymptotic, Series };

std::string_view to_string(SpectrumMethod m);
std::string_view to_string(MatrixKind k);

/// Eigenvalues λ_0..λ_{p-1} of the disk matrices (radius h, basis centered
/// at the disk center, equally spaced directions).
///   Dft        - DFT of the closed-form first row; absolute accuracy about
///                eps·‖A‖, so it cannot resolve the smallest eigenvalues of
///                badly conditioned matrices.
///   Integral   - trapezoid evaluation (4096 points) of the generating
///                function's Fourier integrals, e.g. hp∫J_{2L}(2κh sin t)dt
///                for the mass matrix.
///   Asymptotic - 2πhp(κh)^{2s}/Γ(2s+1) (mass matrix only), s = min(L, p-L).
///   Series     - Bessel addition-theorem sums, e.g. 2πhp Σ_j J_{L+jp}(κh)²;
///                all terms are non-negative for M and D, so tiny
///                eigenvalues keep full relative accuracy.
std::vector<double> disk_spectrum(MatrixKind which, int p, double kappa, double h, SpectrumMethod method);

struct SpectrumRow {
  int index;
  cd dft;
  double integral;
  double asymptotic;  ///< NaN for cross/stiffness
  double series;
  int partner;        ///< index carrying the same eigenvalue (p - L), or L itself
};

std::vector<SpectrumRow> spectrum_report(MatrixKind which, int p, double kappa, double h);

struct ConditionEstimate {
  double cond;
  double lambda_min;
  double lambda_max;
  double log_proxy;  ///< ln of Γ(p+1)(κh)^{-p}/(2πhp) for M, (p+2)!(κh)^{-2-p} for D
};

/// |λ_max / λ_min| of the disk mass or stiffness matrix from the chosen
/// spectrum route, plus the growth proxy.
ConditionEstimate disk_condition_estimate(MatrixKind which, int p, double kappa, double h,
                                          SpectrumMethod method = SpectrumMethod::Dft);

/// Large-p limit of C_best for a cyclic polygon:
/// entry (i, j) = Σ_edges ∫ J_0(κ r(t) a(i-j)) g(t) dt.
DenseMatrix cyclic_best_limit(const CyclicAngles& angles, const PlaneWaveBasis& basis, int points_per_edge = 0);

}  // namespace trefftz
