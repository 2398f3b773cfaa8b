#include "zcross/simd/radial_kernels.hpp"

#include "zcross/error.hpp"

namespace zcross::simd {

RadialCoefficients RadialCoefficients::from_weights(std::span<const double> weights) {
  RadialCoefficients rc;
  rc.c0.resize(weights.size());
  rc.c1.resize(weights.size());
  rc.c2.resize(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double w2 = weights[j] * weights[j];
    const double jj = static_cast<double>(j);
    rc.c0[j] = w2;
    rc.c1[j] = jj * w2;
    rc.c2[j] = jj * jj * w2;
  }
  return rc;
}

void radial_kernels_scalar(const RadialCoefficients& coeffs, std::span<const double> xs,
                           std::span<const double> ys, std::span<KernelTriple> out) {
  if (xs.size() != ys.size() || out.size() != xs.size()) {
    throw Error(Errc::InvalidArgument, "radial_kernels: span sizes differ");
  }
  const std::size_t terms = coeffs.terms();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i], y = ys[i];
    const double r = x * x + y * y;
    double power = 1.0, prev = 0.0;  // r^j, r^{j-1}
    double s0 = 0.0, e0 = 0.0, s1 = 0.0, e1 = 0.0, s2 = 0.0, e2 = 0.0;
    for (std::size_t j = 0; j < terms; ++j) {
      const double t0 = coeffs.c0[j] * power - e0;
      const double u0 = s0 + t0;
      e0 = (u0 - s0) - t0;
      s0 = u0;
      const double t1 = coeffs.c1[j] * prev - e1;
      const double u1 = s1 + t1;
      e1 = (u1 - s1) - t1;
      s1 = u1;
      const double t2 = coeffs.c2[j] * prev - e2;
      const double u2 = s2 + t2;
      e2 = (u2 - s2) - t2;
      s2 = u2;
      prev = power;
      power = power * r;
    }
    out[i] = KernelTriple{s0, cplx{x * s1, -y * s1}, s2};
  }
}

}  // namespace zcross::simd
