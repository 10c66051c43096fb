// AVX2/FMA variants. Each 256-bit register holds two interleaved complex
// doubles [re0, im0, re1, im1]; odd-length tails fall back to scalar code.

#include "trefftz/kernels.hpp"

#include <immintrin.h>

#include <cassert>

namespace trefftz::kernels::avx2 {
namespace {

inline __m256d load2(const cd* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cd* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// (a * b) lane-wise for two complex numbers.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline __m256d conj2(__m256d a) {
  const __m256d mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  return _mm256_xor_pd(a, mask);
}

inline __m256d broadcast(cd z) { return _mm256_set_pd(z.imag(), z.real(), z.imag(), z.real()); }

inline cd hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, s);
  return {out[0], out[1]};
}

cd dot_plain(const cd* x, const cd* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, cmul(load2(x + i), load2(y + i)));
    acc1 = _mm256_add_pd(acc1, cmul(load2(x + i + 2), load2(y + i + 2)));
  }
  for (; i + 2 <= n; i += 2) acc0 = _mm256_add_pd(acc0, cmul(load2(x + i), load2(y + i)));
  cd total = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

void gemv(std::span<const cd> a, std::span<const cd> x, std::span<cd> y) {
  const std::size_t cols = x.size();
  assert(a.size() == y.size() * cols);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = dot_plain(a.data() + i * cols, x.data(), cols);
}

cd dotc(std::span<const cd> x, std::span<const cd> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, cmul(conj2(load2(&x[i])), load2(&y[i])));
    acc1 = _mm256_add_pd(acc1, cmul(conj2(load2(&x[i + 2])), load2(&y[i + 2])));
  }
  for (; i + 2 <= n; i += 2) acc0 = _mm256_add_pd(acc0, cmul(conj2(load2(&x[i])), load2(&y[i])));
  cd total = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += std::conj(x[i]) * y[i];
  return total;
}

inline void axpy_raw(cd alpha, const cd* x, cd* y, std::size_t n) {
  const __m256d va = broadcast(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(y + i, _mm256_add_pd(load2(y + i), cmul(va, load2(x + i))));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void axpy(cd alpha, std::span<const cd> x, std::span<cd> y) {
  assert(x.size() == y.size());
  axpy_raw(alpha, x.data(), y.data(), x.size());
}

void axpy_conj(cd alpha, std::span<const cd> x, std::span<cd> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const __m256d va = broadcast(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    store2(&y[i], _mm256_add_pd(load2(&y[i]), cmul(va, conj2(load2(&x[i])))));
  for (; i < n; ++i) y[i] += alpha * std::conj(x[i]);
}

void weighted_gram(std::size_t p, std::span<const double> w,
                   std::span<const cd> a, std::span<const cd> b,
                   std::span<cd> out) {
  const std::size_t nodes = w.size();
  assert(a.size() == nodes * p && b.size() == nodes * p);
  assert(out.size() == p * p);
  for (std::size_t k = 0; k < nodes; ++k) {
    const cd* ak = a.data() + k * p;
    const cd* bk = b.data() + k * p;
    for (std::size_t r = 0; r < p; ++r)
      axpy_raw(w[k] * std::conj(bk[r]), ak, out.data() + r * p, p);
  }
}

}  // namespace

const KernelTable table{Isa::Avx2, gemv, dotc, axpy, axpy_conj, weighted_gram};

}  // namespace trefftz::kernels::avx2
