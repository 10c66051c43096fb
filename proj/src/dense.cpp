#include "trefftz/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trefftz/kernels.hpp"

namespace trefftz {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  m.flags = {true, true, true};
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const cd> d) {
  DenseMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
  m.flags = flags;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
  m.flags = flags;
  return m;
}

CVector DenseMatrix::apply(std::span<const cd> x) const {
  if (x.size() != n_) throw std::invalid_argument("DenseMatrix::apply: dimension mismatch");
  CVector y(n_);
  kernels::active().gemv(a_, x, y);
  return y;
}

double DenseMatrix::frobenius() const {
  double s = 0.0;
  for (const cd& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (const cd& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double DenseMatrix::hermitian_defect() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(s);
}

double DenseMatrix::symmetric_defect() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s += std::norm((*this)(i, j) - (*this)(j, i));
  return std::sqrt(s);
}

double DenseMatrix::imag_max() const {
  double m = 0.0;
  for (const cd& z : a_) m = std::max(m, std::abs(z.imag()));
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& b) {
  if (b.n_ != n_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
  flags = {flags.hermitian && b.flags.hermitian, flags.real && b.flags.real, flags.circulant && b.flags.circulant};
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& b) {
  if (b.n_ != n_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= b.a_[k];
  flags = {flags.hermitian && b.flags.hermitian, flags.real && b.flags.real, flags.circulant && b.flags.circulant};
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(cd s) {
  for (cd& z : a_) z *= s;
  const bool real_scalar = s.imag() == 0.0;
  flags.hermitian = flags.hermitian && real_scalar;
  flags.real = flags.real && real_scalar;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  const std::size_t n = a.n_;
  DenseMatrix c(n);
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < n; ++i) {
    std::span<cd> row(c.a_.data() + i * n, n);
    for (std::size_t l = 0; l < n; ++l) {
      const cd s = a(i, l);
      if (s != cd{}) k.axpy(s, std::span<const cd>(b.a_.data() + l * n, n), row);
    }
  }
  return c;
}

double norm2(std::span<const cd> x) {
  // Scaled sum of squares so huge/tiny vectors neither overflow nor flush.
  double scale = 0.0;
  for (const cd& z : x) scale = std::max(scale, std::max(std::abs(z.real()), std::abs(z.imag())));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double s = 0.0;
  for (const cd& z : x) s += std::norm(z / scale);
  return scale * std::sqrt(s);
}

cd dotc(std::span<const cd> x, std::span<const cd> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dotc: dimension mismatch");
  return kernels::active().dotc(x, y);
}

CVector add(std::span<const cd> x, std::span<const cd> y) {
  if (x.size() != y.size()) throw std::invalid_argument("add: dimension mismatch");
  CVector z(x.begin(), x.end());
  kernels::active().axpy(1.0, y, z);
  return z;
}

CVector sub(std::span<const cd> x, std::span<const cd> y) {
  if (x.size() != y.size()) throw std::invalid_argument("sub: dimension mismatch");
  CVector z(x.begin(), x.end());
  kernels::active().axpy(-1.0, y, z);
  return z;
}

CVector scale(cd s, std::span<const cd> x) {
  CVector z(x.begin(), x.end());
  for (cd& v : z) v *= s;
  return z;
}

}  // namespace trefftz
