#pragma once

#include <cstddef>
#include <vector>

#include "zcross/types.hpp"

namespace zcross {

/// Three-term recurrence for polynomials orthonormal on the real line.
///
/// Row j generates the next polynomial:
///   p_{j+1}(z) = (a_j z + b_j) p_j(z) - c_j p_{j-1}(z),   p_{-1} = 0, p_0 = p0.
/// The leading coefficient of p_j is k_j = p0 * a_0 * ... * a_{j-1}.
struct RecurrenceRealLine {
  double p0 = 1.0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;

  std::size_t rows() const { return a.size(); }
  /// Leading coefficient k_j of p_j, 0 <= j <= rows().
  double leading(std::size_t j) const;
  /// Throws InvalidArgument unless p0 > 0, a_j > 0 and the row vectors agree in length.
  void validate() const;

  /// Orthonormal Legendre polynomials on [-1, 1] with weight dx.
  static RecurrenceRealLine legendre(std::size_t rows);
  /// Orthonormal Chebyshev polynomials of the second kind, weight sqrt(1 - x^2).
  static RecurrenceRealLine chebyshev_u(std::size_t rows);
};

/// Verblunsky coefficients of the Szego recurrence
///   phi_{j+1} = z phi_j - conj(alpha_j) phi*_j,  phi*_{j+1} = phi*_j - alpha_j z phi_j.
struct VerblunskyCoefficients {
  std::vector<cplx> alphas;

  std::size_t size() const { return alphas.size(); }
  /// Throws InvalidVerblunsky if any |alpha_j| >= 1.
  void validate() const;

  static VerblunskyCoefficients constant(std::size_t count, cplx alpha);
};

}  // namespace zcross
