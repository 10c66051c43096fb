#include "trefftz/kernels.hpp"

#include <cassert>

namespace trefftz::kernels::scalar {
namespace {

void gemv(std::span<const cd> a, std::span<const cd> x, std::span<cd> y) {
  const std::size_t cols = x.size();
  assert(a.size() == y.size() * cols);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const cd* row = a.data() + i * cols;
    cd acc{0.0, 0.0};
    for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

cd dotc(std::span<const cd> x, std::span<const cd> y) {
  assert(x.size() == y.size());
  cd acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

void axpy(cd alpha, std::span<const cd> x, std::span<cd> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void axpy_conj(cd alpha, std::span<const cd> x, std::span<cd> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * std::conj(x[i]);
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
    for (std::size_t r = 0; r < p; ++r) {
      const cd scale = w[k] * std::conj(bk[r]);
      cd* row = out.data() + r * p;
      for (std::size_t c = 0; c < p; ++c) row[c] += scale * ak[c];
    }
  }
}

}  // namespace

const KernelTable table{Isa::Scalar, gemv, dotc, axpy, axpy_conj, weighted_gram};

}  // namespace trefftz::kernels::scalar
