#pragma once

#include <vector>

#include "trefftz/dense.hpp"

namespace trefftz {

/// PA = LU with partial pivoting. Throws SingularOperatorError when a pivot
/// is exactly zero.
class LuFactorization {
 public:
  explicit LuFactorization(const DenseMatrix& a);
  CVector solve(std::span<const cd> b) const;
  std::size_t size() const { return lu_.size(); }

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
};

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  DenseMatrix vectors;         ///< column k pairs with values[k]
};

/// Dense Hermitian eigendecomposition; only the lower triangle is read.
HermitianEigen hermitian_eigen(const DenseMatrix& a);
std::vector<double> hermitian_eigenvalues(const DenseMatrix& a);

/// A^e for Hermitian positive definite A via its eigendecomposition.
DenseMatrix hermitian_power(const DenseMatrix& a, double exponent);

/// Singular values, descending.
std::vector<double> singular_values(const DenseMatrix& a);

/// σ_max / σ_min; +inf when σ_min is zero.
double cond2(const DenseMatrix& a);

}  // namespace trefftz
