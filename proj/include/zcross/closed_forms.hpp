#pragma once

#include <span>
#include <string>
#include <vector>

#include "zcross/types.hpp"

namespace zcross {

/// Closed forms are refused when | |z|^2 - 1 | is below this.
inline constexpr double kNearUnitCircle = 1e-8;
inline constexpr double kNearOrigin = 1e-8;

/// B(z) = 1 / (1 - |z|^2). Throws NearUnitCircle on the guard band.
double geometric_factor(ComplexPoint z);

/// Monomial kernels from the geometric-series closed forms.
KernelTriple kernels_monomial_closed(int n, ComplexPoint z);

/// kernels_monomial_closed away from the unit circle, direct sums on it.
KernelTriple kernels_monomial(int n, ComplexPoint z);

/// Root-binomial kernels from the binomial closed forms; needs |z| > 1e-8.
KernelTriple kernels_rootbinomial_closed(int n, ComplexPoint z);

/// Monomial limit density inside the unit disc as N -> infinity.
double density_monomial_limit_inside(Level level, ComplexPoint z);

/// Exact monomial density at z = +-1.
double density_monomial_at_unit(int n, Level level);

/// Weyl limit density as N -> infinity.
double density_weyl_limit(Level level, ComplexPoint z);

/// Large-N form for monomials outside the unit circle. This is a
/// comparison target, not a density: it is not reproduced by exact kernels.
double density_monomial_asymptotic_outside(int n, Level level, ComplexPoint z);

/// Large-N form for root-binomial sums (negative at K = 0).
double density_rootbinomial_asymptotic(int n, Level level, ComplexPoint z);

enum class Theorem { T4 = 4, T5 = 5, T6 = 6, T7 = 7, T8 = 8 };

struct AsymptoticPoint {
  int n = 0;
  ComplexPoint z;
  Level level;
};

struct AsymptoticReport {
  Theorem theorem = Theorem::T4;
  ComplexPoint z;
  int n = 0;
  Level level;
  double exact = 0.0;
  double printed_asymptotic = 0.0;
  double abs_gap = 0.0;
  double rel_gap = 0.0;
  bool sign_mismatch = false;
};

struct SkippedPoint {
  AsymptoticPoint point;
  std::string reason;
};

struct AsymptoticComparison {
  std::vector<AsymptoticReport> reports;  // sorted by rel_gap, descending
  std::vector<SkippedPoint> skipped;
};

AsymptoticComparison compare_asymptotics(Theorem theorem, std::span<const AsymptoticPoint> grid);

}  // namespace zcross
