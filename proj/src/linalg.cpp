#include "trefftz/linalg.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "trefftz/errors.hpp"

namespace trefftz {
namespace {

using RowMajor = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajor> view(const DenseMatrix& a) {
  return {a.data().data(), static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(a.size())};
}

}  // namespace

LuFactorization::LuFactorization(const DenseMatrix& a) : lu_(a), perm_(a.size()) {
  const std::size_t n = a.size();
  std::iota(perm_.begin(), perm_.end(), 0);
  for (const cd& z : a.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("LU: matrix has non-finite entries");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) throw SingularOperatorError("LU: exactly singular pivot in column " + std::to_string(k));
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
      std::swap(perm_[k], perm_[piv]);
    }
    const cd inv = 1.0 / lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cd f = lu_(i, k) * inv;
      lu_(i, k) = f;
      if (f == cd{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
    }
  }
}

CVector LuFactorization::solve(std::span<const cd> b) const {
  const std::size_t n = lu_.size();
  if (b.size() != n) throw std::invalid_argument("LU solve: dimension mismatch");
  CVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  return x;
}

HermitianEigen hermitian_eigen(const DenseMatrix& a) {
  const Eigen::MatrixXcd m = view(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  HermitianEigen out;
  const std::size_t n = a.size();
  out.values.resize(n);
  out.vectors = DenseMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = es.eigenvalues()(k);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = es.eigenvectors()(i, k);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& a) {
  const Eigen::MatrixXcd m = view(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

DenseMatrix hermitian_power(const DenseMatrix& a, double exponent) {
  const HermitianEigen e = hermitian_eigen(a);
  const std::size_t n = a.size();
  DenseMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(e.values[k] > 0.0)) throw SingularOperatorError("hermitian_power: matrix is not positive definite");
    const double s = std::pow(e.values[k], exponent);
    for (std::size_t i = 0; i < n; ++i) {
      const cd vi = s * e.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(e.vectors(j, k));
    }
  }
  out.flags.hermitian = true;
  return out;
}

std::vector<double> singular_values(const DenseMatrix& a) {
  const Eigen::MatrixXcd m = view(a);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double cond2(const DenseMatrix& a) {
  const auto s = singular_values(a);
  if (s.empty()) return 1.0;
  if (s.back() == 0.0) return std::numeric_limits<double>::infinity();
  return s.front() / s.back();
}

}  // namespace trefftz
