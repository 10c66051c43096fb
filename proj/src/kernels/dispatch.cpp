#include "trefftz/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace trefftz::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

namespace {

bool cpu_has_avx2() {
#if defined(TREFFTZ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() {
  if (const char* env = std::getenv("TREFFTZ_SIMD"); env && std::strcmp(env, "scalar") == 0)
    return scalar::table;
  if (const KernelTable* t = table_for(Isa::Avx2)) return *t;
  return scalar::table;
}

}  // namespace

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return &scalar::table;
    case Isa::Avx2:
#if defined(TREFFTZ_HAVE_AVX2)
      if (cpu_has_avx2()) return &avx2::table;
#endif
      return nullptr;
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

}  // namespace trefftz::kernels
