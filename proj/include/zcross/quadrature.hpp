#pragma once

#include <cstdint>
#include <functional>

#include "zcross/basis.hpp"
#include "zcross/types.hpp"

namespace zcross {

using DensityFn = std::function<double(ComplexPoint)>;

struct CountResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool budget_exceeded = false;
};

inline constexpr std::int64_t kDefaultEvaluationBudget = 10'000'000;

/// Integral of `density` over `rect` by adaptive bisection. Each cell uses a
/// 7x7 tensor Gauss rule; the per-axis error is the gap to the 3-point rule
/// along that axis, and the cell with the largest error is split along its
/// worse axis (x on ties). Stops when the summed error <= rel_tol * |value|.
/// On budget exhaustion the partial result is returned with budget_exceeded
/// set.
CountResult expected_count(const DensityFn& density, const Rect& rect, double rel_tol,
                           std::int64_t max_evaluations = kDefaultEvaluationBudget);

/// Expected count in the annulus r_lo <= |z| < r_hi: the same integrator run on
/// the polar rectangle [r_lo, r_hi] x [0, 2pi] with Jacobian r.
CountResult expected_count_annulus(const DensityFn& density, double r_lo, double r_hi,
                                   double rel_tol,
                                   std::int64_t max_evaluations = kDefaultEvaluationBudget);

/// Cell-centered samples of `density`, row-major.
DensityGrid density_grid(const DensityFn& density, const Rect& rect, int nx, int ny);

/// Density grid of a basis family at a level. Weighted-monomial families go
/// through the batched radial kernels; the others through density_at.
DensityGrid density_grid_for(const BasisFamily& family, int n, Level level, const Rect& rect,
                             int nx, int ny, int threads = 1);

}  // namespace zcross
