#pragma once

#include "zcross/basis.hpp"
#include "zcross/types.hpp"

namespace zcross {

/// Kernel sums from an explicit basis evaluation, Kahan-compensated in
/// ascending j.
KernelTriple kernels_from(const BasisEval& eval);

/// B0, B1, B2 by direct summation over eval_basis.
KernelTriple kernels_direct(const BasisFamily& family, int n, ComplexPoint z);

/// Preferred kernel route for a family: Christoffel-Darboux for orthogonal
/// polynomial families (which fall back to direct sums near their singular
/// sets), direct summation otherwise.
KernelTriple kernels_auto(const BasisFamily& family, int n, ComplexPoint z);

/// Expected density of solutions of S_N(z) = K,
///   e^{-|K|^2 / 2B0} / (pi B0) * (B2 - |B1|^2/B0 * (1 - |K|^2 / 2B0)).
/// Throws DegenerateKernel when b0 <= 0.
double density(const KernelTriple& kt, Level level);

/// (B0 B2 - |B1|^2) / (pi B0^2); identical to density(kt, {0, 0}).
double density_zero_level(const KernelTriple& kt);

/// density(kernels_auto(family, n, z), level).
double density_at(const BasisFamily& family, int n, Level level, ComplexPoint z);

}  // namespace zcross
