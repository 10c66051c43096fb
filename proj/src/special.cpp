#include "trefftz/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trefftz {
namespace {

constexpr double kTiny = 1e-300;
constexpr double kBig = 1e250;

// (x/2)^n / n! by repeated multiplication; returns 0 once the running
// product has dropped below the flush threshold and can only keep shrinking.
double leading_term(int n, double half_x) {
  double t = 1.0;
  for (int k = 1; k <= n; ++k) {
    t *= half_x / k;
    if (t < kTiny && half_x < k) return 0.0;
  }
  return t;
}

double series(int n, double x) {
  const double half = 0.5 * x;
  const double t0 = leading_term(n, half);
  if (t0 == 0.0) return 0.0;
  const double q = -half * half;
  double term = t0;
  double sum = t0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (double(k) * double(n + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

int miller_start(int n, double x) {
  const int m = std::max(n, static_cast<int>(std::ceil(x)));
  int start = m + 20 + static_cast<int>(std::sqrt(60.0 * m));
  if (start % 2) ++start;
  return start;
}

// Downward recurrence from a tiny seed, normalized by J_0 + 2 Σ J_{2k} = 1.
// Fills out[0..nmax] with J_k(x) for x > 0.
void miller(int nmax, double x, double* out) {
  const int start = miller_start(nmax, x);
  const double two_over_x = 2.0 / x;
  double next = 0.0;     // j_{k+1}
  double cur = 1e-30;    // j_k
  double norm = 0.0;
  for (int k = start; k >= 0; --k) {
    if (k <= nmax) out[k] = cur;
    if (k % 2 == 0) norm += (k == 0 ? 1.0 : 2.0) * cur;
    if (k == 0) break;
    const double prev = k * two_over_x * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      next /= kBig;
      norm /= kBig;
      for (int i = k; i <= nmax; ++i) out[i] /= kBig;
    }
  }
  for (int i = 0; i <= nmax; ++i) {
    out[i] /= norm;
    if (std::abs(out[i]) < kTiny) out[i] = 0.0;
  }
}

void check_argument(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("bessel_j: argument is not finite");
  if (std::abs(x) > 1e6) throw std::invalid_argument("bessel_j: |x| exceeds 1e6");
}

}  // namespace

double bessel_j(int n, double x) {
  check_argument(x);
  if (n < -2000 || n > 2000) throw std::invalid_argument("bessel_j: |n| exceeds 2000");

  double sign = 1.0;
  if (n < 0) {
    n = -n;
    if (n % 2) sign = -sign;
  }
  if (x < 0) {
    x = -x;
    if (n % 2) sign = -sign;
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;

  double value;
  // The ascending series is alternating with term ratio bounded by 1/2 in
  // this region, so it loses at most a couple of bits to cancellation.
  if (0.25 * x * x <= 0.5 * (n + 1)) {
    value = series(n, x);
  } else {
    std::vector<double> buf(n + 1);
    miller(n, x, buf.data());
    value = buf[n];
  }
  if (std::abs(value) < kTiny) return 0.0;
  return sign * value;
}

std::vector<double> bessel_j_range(int nmax, double x) {
  check_argument(x);
  if (nmax < 0) throw std::invalid_argument("bessel_j_range: negative order");
  if (x < 0) throw std::invalid_argument("bessel_j_range: negative argument");
  std::vector<double> out(nmax + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  miller(nmax, x, out.data());
  return out;
}

double bessel_j_small_arg(int n, double z) {
  if (n < 0) throw std::invalid_argument("bessel_j_small_arg: negative order");
  if (n == 0) return 1.0;
  if (z == 0.0) return 0.0;
  if (n <= 300) return leading_term(n, 0.5 * z);
  return std::exp(n * std::log(0.5 * z) - std::lgamma(n + 1.0));
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("ln_gamma: argument must be positive, got " + std::to_string(x));
  return std::lgamma(x);
}

}  // namespace trefftz
