#pragma once

#include <span>
#include <vector>

#include "zcross/types.hpp"

namespace zcross::simd {

/// Batched kernels for f_j = w_j z^j. With r = |z|^2 these reduce to
///   B0 = sum w_j^2 r^j,  B1 = conj(z) sum j w_j^2 r^{j-1},  B2 = sum j^2 w_j^2 r^{j-1},
/// so one point costs three compensated power sums.
struct RadialCoefficients {
  std::vector<double> c0;  // w_j^2
  std::vector<double> c1;  // j w_j^2
  std::vector<double> c2;  // j^2 w_j^2

  static RadialCoefficients from_weights(std::span<const double> weights);
  std::size_t terms() const { return c0.size(); }
};

enum class Isa { Scalar, Avx2 };

/// Best level supported by this build and the running CPU.
Isa detected_isa();
const char* isa_name(Isa isa);

/// Reference implementation; the vector variants reproduce it bit for bit.
void radial_kernels_scalar(const RadialCoefficients& coeffs, std::span<const double> xs,
                           std::span<const double> ys, std::span<KernelTriple> out);

#if defined(ZCROSS_WITH_AVX2)
void radial_kernels_avx2(const RadialCoefficients& coeffs, std::span<const double> xs,
                         std::span<const double> ys, std::span<KernelTriple> out);
#endif

/// Dispatches to `isa` (default: detected_isa()). Throws OverflowDomain if
/// any output is not finite.
void radial_kernels(const RadialCoefficients& coeffs, std::span<const double> xs,
                    std::span<const double> ys, std::span<KernelTriple> out);
void radial_kernels(const RadialCoefficients& coeffs, std::span<const double> xs,
                    std::span<const double> ys, std::span<KernelTriple> out, Isa isa);

}  // namespace zcross::simd
