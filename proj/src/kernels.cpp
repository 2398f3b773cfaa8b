#include "zcross/kernels.hpp"

#include <cmath>
#include <numbers>

#include "zcross/error.hpp"
#include "zcross/orthogonal.hpp"

namespace zcross {
namespace {

struct Kahan {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

void require_positive_b0(const KernelTriple& kt) {
  if (!(kt.b0 > 0.0)) throw Error(Errc::DegenerateKernel, "B0 must be positive");
}

}  // namespace

KernelTriple kernels_from(const BasisEval& eval) {
  Kahan b0, b1_re, b1_im, b2;
  for (std::size_t j = 0; j < eval.values.size(); ++j) {
    const cplx f = eval.values[j];
    const cplx df = eval.derivatives[j];
    const cplx cross = std::conj(f) * df;
    b0.add(std::norm(f));
    b1_re.add(cross.real());
    b1_im.add(cross.imag());
    b2.add(std::norm(df));
  }
  return {b0.sum, {b1_re.sum, b1_im.sum}, b2.sum};
}

KernelTriple kernels_direct(const BasisFamily& family, int n, ComplexPoint z) {
  return kernels_from(eval_basis(family, n, z));
}

KernelTriple kernels_auto(const BasisFamily& family, int n, ComplexPoint z) {
  if (const auto* op = std::get_if<RealLineOP>(&family)) return kernels_cd_realline(op->rec, n, z);
  if (const auto* op = std::get_if<CircleOP>(&family)) return kernels_cd_circle(op->verblunsky, n, z);
  return kernels_direct(family, n, z);
}

// Both densities are evaluated in the scale-free form
//   e^{-q} (B2/B0 - (|B1|/B0)^2 + q (|B1|/B0)^2) / pi,  q = |K|^2 / 2B0,
// so that large kernels do not overflow and K = 0 reproduces
// density_zero_level operation for operation.
double density(const KernelTriple& kt, Level level) {
  require_positive_b0(kt);
  const double q = level.norm2() / (2.0 * kt.b0);
  const double ratio = std::abs(kt.b1) / kt.b0;
  const double base = kt.b2 / kt.b0 - ratio * ratio;
  return std::exp(-q) * (base + q * (ratio * ratio)) / std::numbers::pi;
}

double density_zero_level(const KernelTriple& kt) {
  require_positive_b0(kt);
  const double ratio = std::abs(kt.b1) / kt.b0;
  const double base = kt.b2 / kt.b0 - ratio * ratio;
  return base / std::numbers::pi;
}

double density_at(const BasisFamily& family, int n, Level level, ComplexPoint z) {
  return density(kernels_auto(family, n, z), level);
}

}  // namespace zcross
