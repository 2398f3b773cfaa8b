#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "zcross/error.hpp"
#include "zcross/montecarlo.hpp"

namespace zcross {
namespace {

constexpr int kMaxAberthIterations = 200;
constexpr double kAberthRelTol = 1e-12;
constexpr int kPolishSteps = 6;

struct Eval {
  cplx value;
  cplx derivative;
};

// Horner for p and p' with coefficients in ascending order.
Eval horner(const std::vector<cplx>& c, cplx z) {
  cplx p = c.back(), dp = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

// p(z) / p'(z). Outside the unit disc it goes through the reversed polynomial
// q(y) = y^d p(1/y) so that the powers stay bounded.
cplx newton_ratio(const std::vector<cplx>& c, cplx z) {
  if (std::abs(z) <= 1.0) {
    const Eval e = horner(c, z);
    return e.value / e.derivative;
  }
  const std::size_t d = c.size() - 1;
  const cplx y = 1.0 / z;
  cplx q = c[0], dq = 0.0;
  for (std::size_t k = 1; k <= d; ++k) {
    dq = dq * y + q;
    q = q * y + c[k];
  }
  // p'/p = d y - y^2 q'/q
  const cplx log_derivative = static_cast<double>(d) * y - y * y * dq / q;
  return 1.0 / log_derivative;
}

double cauchy_radius(const std::vector<cplx>& c) {
  const double lead = std::abs(c.back());
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k]) / lead);
  return 1.0 + m;
}

bool aberth(const std::vector<cplx>& c, std::vector<cplx>& z) {
  const std::size_t d = c.size() - 1;
  const double radius = cauchy_radius(c);
  z.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / d + 0.4;
    z[k] = std::polar(radius, angle);
  }
  const double floor_tol = std::numeric_limits<double>::epsilon() * radius;
  std::vector<bool> done(d, false);
  for (int it = 0; it < kMaxAberthIterations; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      const cplx ratio = newton_ratio(c, z[k]);
      cplx repulsion = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const cplx w = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[k] -= w;
      if (std::abs(w) <= kAberthRelTol * std::abs(z[k]) + floor_tol) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return true;
  }
  return false;
}

bool companion(const std::vector<cplx>& c, std::vector<cplx>& z) {
  const auto d = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) m(i, d - 1) = -c[i] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) return false;
  z.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
  for (const cplx& r : z) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) return false;
  }
  return true;
}

double abs_residual(const std::vector<cplx>& c, cplx z) {
  if (std::abs(z) <= 1.0) return std::abs(horner(c, z).value);
  const cplx y = 1.0 / z;
  cplx q = c[0];
  for (std::size_t k = 1; k < c.size(); ++k) q = q * y + c[k];
  // |p(z)| = |z|^d |q(1/z)|, compared in log form to avoid overflow.
  const double d = static_cast<double>(c.size() - 1);
  return std::exp(d * std::log(std::abs(z)) + std::log(std::abs(q)));
}

void polish(const std::vector<cplx>& c, cplx& z) {
  double best = abs_residual(c, z);
  for (int s = 0; s < kPolishSteps && best > 0.0; ++s) {
    const cplx candidate = z - newton_ratio(c, z);
    if (!std::isfinite(candidate.real()) || !std::isfinite(candidate.imag())) return;
    const double r = abs_residual(c, candidate);
    if (!(r < best)) return;
    z = candidate;
    best = r;
  }
}

}  // namespace

std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs) {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == cplx{}) --top;
  std::size_t low = 0;
  while (low < top && coeffs[low] == cplx{}) ++low;
  std::vector<cplx> roots(low, cplx{});  // z^low factor
  if (top == 0 || top - low <= 1) return roots;

  const std::vector<cplx> c(coeffs.begin() + static_cast<std::ptrdiff_t>(low),
                            coeffs.begin() + static_cast<std::ptrdiff_t>(top));
  for (const cplx& v : c) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(Errc::InvalidArgument, "polynomial coefficients must be finite");
    }
  }
  std::vector<cplx> found;
  if (!aberth(c, found) && !companion(c, found)) {
    throw Error(Errc::NonConvergence, "root finder did not converge");
  }
  for (cplx& r : found) polish(c, r);
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

}  // namespace zcross
