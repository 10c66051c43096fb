#pragma once

// Data-parallel inner loops shared by assembly, circulant application and
// the Krylov solver. Each kernel has a scalar reference implementation and,
// where the target supports it, an AVX2/FMA variant. The active table is
// chosen once at startup from CPUID; setting TREFFTZ_SIMD=scalar forces the
// reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace trefftz::kernels {

using cd = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  /// y[i] = sum_j A[i*cols + j] * x[j]   (A row-major, rows = y.size()).
  void (*gemv)(std::span<const cd> a, std::span<const cd> x, std::span<cd> y);

  /// sum_i conj(x[i]) * y[i]
  cd (*dotc)(std::span<const cd> x, std::span<const cd> y);

  /// y += alpha * x
  void (*axpy)(cd alpha, std::span<const cd> x, std::span<cd> y);

  /// y += alpha * conj(x)
  void (*axpy_conj)(cd alpha, std::span<const cd> x, std::span<cd> y);

  /// out[r*p + c] += sum_k w[k] * a[k*p + c] * conj(b[k*p + r])
  ///
  /// Weighted boundary Gram product over K quadrature nodes; `a` holds the
  /// trial-side samples and `b` the test-side samples, both K x p row-major.
  void (*weighted_gram)(std::size_t p, std::span<const double> w,
                        std::span<const cd> a, std::span<const cd> b,
                        std::span<cd> out);
};

/// Table selected for this process (CPU features + TREFFTZ_SIMD override).
const KernelTable& active();

/// Table for a specific ISA, or nullptr when it was not compiled in or the
/// CPU lacks the instructions.
const KernelTable* table_for(Isa isa);

namespace scalar {
extern const KernelTable table;
}

#if defined(TREFFTZ_HAVE_AVX2)
namespace avx2 {
extern const KernelTable table;
}
#endif

}  // namespace trefftz::kernels
