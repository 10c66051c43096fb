#pragma once

#include <vector>

namespace trefftz {

/// Bessel function of the first kind J_n(x) for integer order and real
/// argument. Accurate to about 1e-13 relative while |J_n(x)| > 1e-300; smaller
/// values are flushed to zero. Throws std::invalid_argument for non-finite x
/// or |n| > 2000, |x| > 1e6.
double bessel_j(int n, double x);

/// J_0(x), J_1(x), ..., J_nmax(x) in one downward sweep. Same accuracy
/// contract as bessel_j; x must be non-negative.
std::vector<double> bessel_j_range(int nmax, double x);

/// Leading small-argument term (z/2)^n / n!. Underflows quietly to zero.
double bessel_j_small_arg(int n, double z);

/// ln Γ(x) for x > 0.
double ln_gamma(double x);

}  // namespace trefftz
