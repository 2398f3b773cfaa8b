#include "zcross/simd/radial_kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "zcross/error.hpp"

namespace zcross::simd {

Isa detected_isa() {
  if (const char* forced = std::getenv("ZCROSS_SIMD"); forced && std::strcmp(forced, "scalar") == 0) {
    return Isa::Scalar;
  }
#if defined(ZCROSS_WITH_AVX2)
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

void radial_kernels(const RadialCoefficients& coeffs, std::span<const double> xs,
                    std::span<const double> ys, std::span<KernelTriple> out) {
  radial_kernels(coeffs, xs, ys, out, detected_isa());
}

void radial_kernels(const RadialCoefficients& coeffs, std::span<const double> xs,
                    std::span<const double> ys, std::span<KernelTriple> out, Isa isa) {
  switch (isa) {
#if defined(ZCROSS_WITH_AVX2)
    case Isa::Avx2:
      radial_kernels_avx2(coeffs, xs, ys, out);
      break;
#endif
    default:
      radial_kernels_scalar(coeffs, xs, ys, out);
      break;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const KernelTriple& kt = out[i];
    if (!std::isfinite(kt.b0) || !std::isfinite(kt.b2) || !std::isfinite(kt.b1.real()) ||
        !std::isfinite(kt.b1.imag())) {
      const ComplexPoint z{xs[i], ys[i]};
      throw Error(Errc::OverflowDomain, "kernel sums not representable", z);
    }
  }
}

}  // namespace zcross::simd
