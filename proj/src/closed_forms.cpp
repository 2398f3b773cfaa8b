#include "zcross/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zcross/basis.hpp"
#include "zcross/error.hpp"
#include "zcross/kernels.hpp"

namespace zcross {
namespace {

// The closed forms divide by (1 - |z|^2)^3 and |z|^4; their numerators cancel
// to the same order, so they are evaluated in a wider type.
#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

Wide wide_pow(Wide base, int exponent) {
  Wide result = 1;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Wide wide_abs2(ComplexPoint z) {
  const Wide x = z.re, y = z.im;
  return x * x + y * y;
}

void require_degree(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
}

double finite_or_throw(double v, ComplexPoint z) {
  if (!std::isfinite(v)) throw Error(Errc::OverflowDomain, "closed form not representable", z);
  return v;
}

}  // namespace

double geometric_factor(ComplexPoint z) {
  const double u = static_cast<double>(Wide(1) - wide_abs2(z));
  if (std::abs(u) < kNearUnitCircle) {
    throw Error(Errc::NearUnitCircle, "B(z) is singular on |z| = 1", z);
  }
  return 1.0 / u;
}

KernelTriple kernels_monomial_closed(int n, ComplexPoint z) {
  require_degree(n);
  const Wide r = wide_abs2(z);
  const Wide u = Wide(1) - r;
  if (std::abs(static_cast<double>(u)) < kNearUnitCircle) {
    throw Error(Errc::NearUnitCircle, "monomial closed forms are singular on |z| = 1", z);
  }
  const Wide big_b = Wide(1) / u;
  const Wide q = wide_pow(r, n);  // |z|^{2N}
  const Wide nn = n;

  const Wide b0 = (Wide(1) - q * r) * big_b;
  // z B1 = |z|^2 sum j |z|^{2(j-1)}, so B1 = conj(z) * s1.
  const Wide s1 = (nn * q * r - (nn + 1) * q + 1) * big_b * big_b;
  const Wide b2 =
      (Wide(1) + r - q * (nn * nn * r * r - (2 * nn * nn + 2 * nn - 1) * r + (nn + 1) * (nn + 1))) *
      big_b * big_b * big_b;

  KernelTriple kt;
  kt.b0 = finite_or_throw(static_cast<double>(b0), z);
  kt.b1 = std::conj(z.value()) * finite_or_throw(static_cast<double>(s1), z);
  kt.b2 = finite_or_throw(static_cast<double>(b2), z);
  return kt;
}

KernelTriple kernels_monomial(int n, ComplexPoint z) {
  const double u = static_cast<double>(Wide(1) - wide_abs2(z));
  if (std::abs(u) < kNearUnitCircle) return kernels_direct(Monomial{}, n, z);
  return kernels_monomial_closed(n, z);
}

KernelTriple kernels_rootbinomial_closed(int n, ComplexPoint z) {
  require_degree(n);
  const Wide r = wide_abs2(z);
  if (!(std::sqrt(static_cast<double>(r)) > kNearOrigin)) {
    throw Error(Errc::NearOrigin, "root-binomial closed forms are singular at z = 0", z);
  }
  const Wide nn = n;
  const Wide t = r + 1;
  const Wide tn = wide_pow(t, n);  // (|z|^2 + 1)^N

  const Wide b0 = (tn * t - 1) / ((nn + 1) * r);
  // B1 = ((N|z|^2 - 1)(|z|^2 + 1)^N + 1) / ((N + 1) z |z|^2); 1/z = conj(z)/|z|^2.
  const Wide s1 = ((nn * r - 1) * tn + 1) / ((nn + 1) * r * r);
  const Wide b2 = (tn * (r * (nn * nn * r - nn + 1) + 1) - r - 1) / ((nn + 1) * r * r * t);

  KernelTriple kt;
  kt.b0 = finite_or_throw(static_cast<double>(b0), z);
  kt.b1 = std::conj(z.value()) * finite_or_throw(static_cast<double>(s1), z);
  kt.b2 = finite_or_throw(static_cast<double>(b2), z);
  return kt;
}

double density_monomial_limit_inside(Level level, ComplexPoint z) {
  const double r = z.abs2();
  if (!(std::sqrt(r) < 1.0 - kNearUnitCircle)) {
    throw Error(Errc::OutsideDomain, "limit density needs |z| < 1", z);
  }
  const double big_b = 1.0 / (1.0 - r);
  const double k2 = level.norm2();
  return std::exp(-k2 / (2.0 * big_b)) * big_b * (big_b + 0.5 * k2 * r) / std::numbers::pi;
}

double density_monomial_at_unit(int n, Level level) {
  if (n < 1) throw Error(Errc::InvalidArgument, "degree must be at least 1");
  const double nn = n;
  const double k2 = level.norm2();
  const double denom = 2.0 * nn + 2.0;
  return std::exp(-k2 / denom) * (2.0 * nn + nn * nn * (1.0 + 3.0 * k2 / denom)) /
         (12.0 * std::numbers::pi);
}

double density_weyl_limit(Level level, ComplexPoint z) {
  const double r = z.abs2();
  const double k2 = level.norm2();
  // Written with e^{-|z|^2} so large |z| underflows instead of overflowing.
  const double decay = std::exp(-r);
  return std::exp(-0.5 * k2 * decay) * (1.0 + 0.5 * k2 * r * decay) / std::numbers::pi;
}

double density_monomial_asymptotic_outside(int n, Level level, ComplexPoint z) {
  if (n < 1) throw Error(Errc::InvalidArgument, "degree must be at least 1");
  const double r = z.abs2();
  if (!(std::sqrt(r) > 1.0 + kNearUnitCircle)) {
    throw Error(Errc::OutsideDomain, "outside-disc form needs |z| > 1", z);
  }
  const double nn = n;
  const double big_b = 1.0 / (1.0 - r);
  const double rn = std::pow(r, nn);  // |z|^{2N}
  const double k2 = level.norm2();
  const double bracket = nn * nn * (r * r - r + 1.0) - (r + 1.0) / rn -
                         (r / (rn * rn)) * (1.0 + k2 / (2.0 * rn * big_b));
  return std::exp(k2 / (2.0 * rn * big_b)) * big_b * big_b * bracket / std::numbers::pi;
}

double density_rootbinomial_asymptotic(int n, Level level, ComplexPoint z) {
  if (n < 1) throw Error(Errc::InvalidArgument, "degree must be at least 1");
  const double r = z.abs2();
  if (!(std::sqrt(r) > kNearOrigin)) {
    throw Error(Errc::OutsideDomain, "root-binomial form needs |z| > 0", z);
  }
  const double nn = n;
  const double t = r + 1.0;
  const double tn = std::pow(t, nn);
  const double k2 = level.norm2();
  return std::exp(-k2 * nn * r / (2.0 * tn)) * nn * nn * r * r *
         (k2 * nn - 2.0 * std::pow(t, nn - 1.0)) / (2.0 * std::numbers::pi * tn);
}

AsymptoticComparison compare_asymptotics(Theorem theorem, std::span<const AsymptoticPoint> grid) {
  AsymptoticComparison out;
  for (const AsymptoticPoint& pt : grid) {
    try {
      double exact = 0.0, form = 0.0;
      switch (theorem) {
        case Theorem::T4:
          form = density_monomial_limit_inside(pt.level, pt.z);
          exact = density(kernels_monomial(pt.n, pt.z), pt.level);
          break;
        case Theorem::T5:
          form = density_monomial_asymptotic_outside(pt.n, pt.level, pt.z);
          exact = density(kernels_monomial(pt.n, pt.z), pt.level);
          break;
        case Theorem::T6:
          if (pt.z.im != 0.0 || std::abs(pt.z.re) != 1.0) {
            throw Error(Errc::OutsideDomain, "evaluated only at z = +1 and z = -1", pt.z);
          }
          form = density_monomial_at_unit(pt.n, pt.level);
          exact = density(kernels_direct(Monomial{}, pt.n, pt.z), pt.level);
          break;
        case Theorem::T7:
          form = density_weyl_limit(pt.level, pt.z);
          exact = density(kernels_direct(Weyl{}, pt.n, pt.z), pt.level);
          break;
        case Theorem::T8:
          form = density_rootbinomial_asymptotic(pt.n, pt.level, pt.z);
          exact = density(kernels_direct(RootBinomial{pt.n}, pt.n, pt.z), pt.level);
          break;
      }
      AsymptoticReport rep;
      rep.theorem = theorem;
      rep.z = pt.z;
      rep.n = pt.n;
      rep.level = pt.level;
      rep.exact = exact;
      rep.printed_asymptotic = form;
      rep.abs_gap = std::abs(exact - form);
      rep.rel_gap = rep.abs_gap / std::max(std::abs(exact), std::numeric_limits<double>::min());
      rep.sign_mismatch = exact != 0.0 && form != 0.0 && (std::signbit(exact) != std::signbit(form));
      out.reports.push_back(rep);
    } catch (const Error& e) {
      out.skipped.push_back({pt, e.what()});
    }
  }
  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const AsymptoticReport& a, const AsymptoticReport& b) {
                     return a.rel_gap > b.rel_gap;
                   });
  return out;
}

}  // namespace zcross
