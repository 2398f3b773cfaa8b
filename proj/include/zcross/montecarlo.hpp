#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "zcross/basis.hpp"
#include "zcross/types.hpp"

namespace zcross {

/// Complex standard Gaussian coefficients eta_j = a_j + i b_j, a_j, b_j ~ N(0, 1),
/// for 0 <= j <= n. Each eta_j is a pure function of (seed, trial, j).
std::vector<cplx> sample_coefficients(int n, std::uint64_t seed, std::int64_t trial);

/// All roots of sum_k coeffs[k] z^k (Aberth-Ehrlich, companion-matrix
/// fallback), Newton-polished. Leading zero coefficients lower the degree.
/// Throws NonConvergence.
std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs);

/// Roots of sum eta_j w_j z^j = K1 + iK2 for a weighted-monomial family.
std::vector<ComplexPoint> solve_level_polynomial(std::span<const cplx> eta,
                                                 const BasisFamily& family, Level level);

/// Roots of sum eta_j f_j(z) = K for FourierCos / FourierSinCos in the strip
/// -pi < Re z <= pi, via w = e^{iz}.
std::vector<ComplexPoint> solve_level_trig(std::span<const cplx> eta, const BasisFamily& family,
                                           Level level);

/// |S_N(z) - K| together with the rounding scale sum |eta_j f_j(z)| + |K|.
struct Residual {
  double value = 0.0;
  double scale = 0.0;
};
Residual level_residual(std::span<const cplx> eta, const BasisFamily& family, Level level,
                        ComplexPoint z);

struct TrialConfig {
  BasisFamily family;
  int n = 10;
  Level level;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  Rect domain{-2.0, 2.0, -2.0, 2.0};
  int nx = 64;
  int ny = 64;
  int threads = 1;  // 0 = hardware concurrency
};

struct ZeroRecord {
  std::int64_t trial = 0;
  ComplexPoint z;
  double residual = 0.0;
};

/// Root counts per cell, row-major like DensityGrid, bins half-open.
struct Histogram2D {
  Rect rect;
  int nx = 0;
  int ny = 0;
  std::vector<std::int64_t> counts;
  std::int64_t trials = 0;

  Histogram2D() = default;
  Histogram2D(Rect r, int nx_, int ny_);

  /// Adds one root; returns false if it lies outside the rectangle.
  bool add(ComplexPoint z);
  void merge(const Histogram2D& other);
  std::int64_t total() const;
};

struct SimulationResult {
  Histogram2D histogram;
  std::vector<ZeroRecord> records;  // ordered by trial, then root
  std::int64_t failures = 0;
  std::vector<std::int64_t> failed_trials;
};

/// Sample, solve and bin every trial. Output does not depend on the thread count.
SimulationResult run_simulation(const TrialConfig& config);

/// counts / (trials * dx * dy).
DensityGrid empirical_density(const Histogram2D& h);

/// `trial,re,im,residual` with 17 significant digits, LF endings.
void write_zero_records_csv(std::ostream& os, std::span<const ZeroRecord> records);

/// Resolves a thread-count request: positive values are used as given, 0 means
/// hardware concurrency.
int resolve_threads(int requested);

}  // namespace zcross
