#include <immintrin.h>

#include "zcross/error.hpp"
#include "zcross/simd/radial_kernels.hpp"

namespace zcross::simd {
namespace {

struct Compensated {
  __m256d sum = _mm256_setzero_pd();
  __m256d carry = _mm256_setzero_pd();

  void add(__m256d term) {
    const __m256d t = _mm256_sub_pd(term, carry);
    const __m256d u = _mm256_add_pd(sum, t);
    carry = _mm256_sub_pd(_mm256_sub_pd(u, sum), t);
    sum = u;
  }
};

}  // namespace

// Four points per pass; same operation sequence as radial_kernels_scalar.
void radial_kernels_avx2(const RadialCoefficients& coeffs, std::span<const double> xs,
                         std::span<const double> ys, std::span<KernelTriple> out) {
  if (xs.size() != ys.size() || out.size() != xs.size()) {
    throw Error(Errc::InvalidArgument, "radial_kernels: span sizes differ");
  }
  const std::size_t terms = coeffs.terms();
  const std::size_t full = xs.size() / 4 * 4;
  alignas(32) double b0[4], s1[4], b2[4];
  for (std::size_t i = 0; i < full; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    const __m256d y = _mm256_loadu_pd(ys.data() + i);
    const __m256d r = _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
    __m256d power = _mm256_set1_pd(1.0);
    __m256d prev = _mm256_setzero_pd();
    Compensated acc0, acc1, acc2;
    for (std::size_t j = 0; j < terms; ++j) {
      acc0.add(_mm256_mul_pd(_mm256_set1_pd(coeffs.c0[j]), power));
      acc1.add(_mm256_mul_pd(_mm256_set1_pd(coeffs.c1[j]), prev));
      acc2.add(_mm256_mul_pd(_mm256_set1_pd(coeffs.c2[j]), prev));
      prev = power;
      power = _mm256_mul_pd(power, r);
    }
    _mm256_store_pd(b0, acc0.sum);
    _mm256_store_pd(s1, acc1.sum);
    _mm256_store_pd(b2, acc2.sum);
    for (std::size_t k = 0; k < 4; ++k) {
      out[i + k] = KernelTriple{b0[k], cplx{xs[i + k] * s1[k], -ys[i + k] * s1[k]}, b2[k]};
    }
  }
  if (full < xs.size()) {
    radial_kernels_scalar(coeffs, xs.subspan(full), ys.subspan(full), out.subspan(full));
  }
}

}  // namespace zcross::simd
