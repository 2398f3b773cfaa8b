#pragma once

#include <vector>

#include "zcross/basis.hpp"
#include "zcross/recurrence.hpp"
#include "zcross/types.hpp"

namespace zcross {

/// Below this |Im z| the real-line Christoffel-Darboux quotients are replaced
/// by direct summation.
inline constexpr double kRealAxisSwitch = 1e-6;
/// Below this | |z|^2 - 1 | the unit-circle quotients are replaced by direct
/// summation.
inline constexpr double kUnitCircleSwitch = 1e-8;

/// p_j(z), p_j'(z) for 0 <= j <= n. Requires rec.rows() >= n + 1 so that the
/// Christoffel-Darboux route can reach p_{n+1}.
BasisEval eval_op_realline(const RecurrenceRealLine& rec, int n, ComplexPoint z);

/// Kernels through the real-line Christoffel-Darboux identity and its w-derivatives.
KernelTriple kernels_cd_realline(const RecurrenceRealLine& rec, int n, ComplexPoint z);

double density_op_realline(const RecurrenceRealLine& rec, int n, Level level, ComplexPoint z);

/// The closed density for real-line orthogonal polynomials written directly in
/// p_N, p_{N+1} and their derivatives, evaluated term by term.
/// Kept for comparison only: at nonzero levels it differs from
/// density_op_realline (see README, "Known discrepancies").
double density_op_realline_expanded(const RecurrenceRealLine& rec, int n, Level level,
                                     ComplexPoint z);

/// Orthonormal Szego polynomials and their reversals, indices 0..n+1.
struct CircleEval {
  std::vector<cplx> phi;
  std::vector<cplx> phi_star;
  std::vector<cplx> dphi;
  std::vector<cplx> dphi_star;
};

/// Requires at least n + 1 Verblunsky coefficients. The monic Szego output is
/// divided by prod_{k<j} sqrt(1 - |alpha_k|^2).
CircleEval eval_op_circle(const VerblunskyCoefficients& alphas, int n, ComplexPoint z);

KernelTriple kernels_cd_circle(const VerblunskyCoefficients& alphas, int n, ComplexPoint z);

double density_op_circle(const VerblunskyCoefficients& alphas, int n, Level level, ComplexPoint z);

/// Closed unit-circle density in phi_{N+1}, phi*_{N+1} and derivatives, term by
/// term. Undefined on |z| = 1.
double density_op_circle_expanded(const VerblunskyCoefficients& alphas, int n, Level level,
                                   ComplexPoint z);

}  // namespace zcross
