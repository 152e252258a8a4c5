#include <cstdlib>
#include <cstring>

#include "holoquant/simd.hpp"

namespace holoquant::simd {

namespace {

const Kernels scalar_kernels{&scalar::cgemm, &scalar::hermite_synthesis, &scalar::weighted_sum};

#if defined(HOLOQUANT_HAVE_AVX2)
const Kernels avx2_kernels{&avx2::cgemm, &avx2::hermite_synthesis, &avx2::weighted_sum};
#endif

Isa select() {
  const char* env = std::getenv("HOLOQUANT_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  return Isa::Scalar;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(HOLOQUANT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const Kernels& kernels(Isa isa) {
#if defined(HOLOQUANT_HAVE_AVX2)
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return avx2_kernels;
#endif
  (void)isa;
  return scalar_kernels;
}

Isa active_isa() {
  static const Isa isa = select();
  return isa;
}

const Kernels& active() { return kernels(active_isa()); }

}  // namespace holoquant::simd
