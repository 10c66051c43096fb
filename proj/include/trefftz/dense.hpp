#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace trefftz {

using cd = std::complex<double>;
using CVector = std::vector<cd>;

/// Square complex matrix, row-major, with structural metadata.
class DenseMatrix {
 public:
  struct Flags {
    bool hermitian = false;
    bool real = false;
    bool circulant = false;
  };

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const cd> d);

  std::size_t size() const { return n_; }
  cd& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<cd> data() { return a_; }
  std::span<const cd> data() const { return a_; }

  Flags flags;

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;

  CVector apply(std::span<const cd> x) const;

  double frobenius() const;
  double max_abs() const;
  /// ‖A − A*‖_F
  double hermitian_defect() const;
  /// ‖A − Aᵀ‖_F
  double symmetric_defect() const;
  /// max |Im a_ij|
  double imag_max() const;

  DenseMatrix& operator+=(const DenseMatrix& b);
  DenseMatrix& operator-=(const DenseMatrix& b);
  DenseMatrix& operator*=(cd s);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(cd s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<cd> a_;
};

double norm2(std::span<const cd> x);
cd dotc(std::span<const cd> x, std::span<const cd> y);
CVector add(std::span<const cd> x, std::span<const cd> y);
CVector sub(std::span<const cd> x, std::span<const cd> y);
CVector scale(cd s, std::span<const cd> x);

}  // namespace trefftz
