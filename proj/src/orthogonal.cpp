#include "zcross/orthogonal.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "zcross/error.hpp"
#include "zcross/kernels.hpp"

namespace zcross {
namespace {

// p_0..p_m and derivatives by forward recurrence.
BasisEval realline_through(const RecurrenceRealLine& rec, int m, cplx z) {
  rec.validate();
  if (m < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  if (rec.rows() < static_cast<std::size_t>(m)) {
    throw Error(Errc::InsufficientRecurrence,
                "recurrence has " + std::to_string(rec.rows()) + " rows, p_" + std::to_string(m) +
                    " needs " + std::to_string(m));
  }
  BasisEval out;
  out.values.resize(m + 1);
  out.derivatives.resize(m + 1);
  out.values[0] = rec.p0;
  out.derivatives[0] = 0.0;
  cplx p_prev = 0.0, dp_prev = 0.0;
  for (int j = 0; j < m; ++j) {
    const cplx p = out.values[j];
    const cplx dp = out.derivatives[j];
    const cplx factor = rec.a[j] * z + rec.b[j];
    out.values[j + 1] = factor * p - rec.c[j] * p_prev;
    out.derivatives[j + 1] = rec.a[j] * p + factor * dp - rec.c[j] * dp_prev;
    p_prev = p;
    dp_prev = dp;
  }
  return out;
}

void require_rows(const RecurrenceRealLine& rec, int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  if (rec.rows() < static_cast<std::size_t>(n) + 1) {
    throw Error(Errc::InsufficientRecurrence,
                "degree " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                    " recurrence rows, got " + std::to_string(rec.rows()));
  }
}

}  // namespace

BasisEval eval_op_realline(const RecurrenceRealLine& rec, int n, ComplexPoint z) {
  require_rows(rec, n);
  BasisEval out = realline_through(rec, n, z.value());
  return out;
}

KernelTriple kernels_cd_realline(const RecurrenceRealLine& rec, int n, ComplexPoint z) {
  require_rows(rec, n);
  const BasisEval ev = realline_through(rec, n + 1, z.value());
  if (n == 0 || std::abs(z.im) < kRealAxisSwitch) {
    BasisEval head{{ev.values.begin(), ev.values.end() - 1},
                   {ev.derivatives.begin(), ev.derivatives.end() - 1}};
    return kernels_from(head);
  }
  const double ratio = 1.0 / rec.a[n];  // k_N / k_{N+1}
  const double y = z.im;
  const cplx p_n = ev.values[n], p_n1 = ev.values[n + 1];
  const cplx dp_n = ev.derivatives[n], dp_n1 = ev.derivatives[n + 1];
  const cplx two_i_y{0.0, 2.0 * y};

  KernelTriple kt;
  kt.b0 = ratio * (p_n1 * std::conj(p_n)).imag() / y;
  kt.b1 = (ratio * (std::conj(p_n) * dp_n1 - std::conj(p_n1) * dp_n) - kt.b0) / two_i_y;
  // (B1 - conj(B1)) / (2i Im z) == Im(B1) / Im(z).
  kt.b2 = ratio * (dp_n1 * std::conj(dp_n)).imag() / y + kt.b1.imag() / y;
  return kt;
}

double density_op_realline(const RecurrenceRealLine& rec, int n, Level level, ComplexPoint z) {
  return density(kernels_cd_realline(rec, n, z), level);
}

double density_op_realline_expanded(const RecurrenceRealLine& rec, int n, Level level,
                                    ComplexPoint z) {
  require_rows(rec, n);
  if (z.im == 0.0) throw Error(Errc::OutsideDomain, "expanded form needs Im z != 0", z);
  const BasisEval ev = realline_through(rec, n + 1, z.value());
  const double k_ratio = rec.a[n];  // k_{N+1} / k_N
  const double y = z.im;
  const double k2 = level.norm2();
  const cplx p_n = ev.values[n], p_n1 = ev.values[n + 1];
  const cplx dp_n = ev.derivatives[n], dp_n1 = ev.derivatives[n + 1];

  const double im_pp = (p_n1 * std::conj(p_n)).imag();
  const double im_dd = (dp_n1 * std::conj(dp_n)).imag();
  const double cross2 = std::norm(std::conj(p_n) * dp_n1 - std::conj(p_n1) * dp_n);
  const double re_mixed = (p_n * dp_n1 - p_n1 * std::conj(dp_n)).real();

  const double zero_level = im_dd / im_pp - cross2 / (4.0 * im_pp * im_pp) + 1.0 / (4.0 * y * y);
  const double level_term =
      k2 * k_ratio *
      (cross2 * y / (8.0 * im_pp * im_pp * im_pp) - re_mixed / (4.0 * im_pp * im_pp) +
       1.0 / (8.0 * y * im_pp));
  return std::exp(-k2 * k_ratio * y / im_pp) * (zero_level + level_term) / std::numbers::pi;
}

CircleEval eval_op_circle(const VerblunskyCoefficients& alphas, int n, ComplexPoint z) {
  alphas.validate();
  if (n < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  if (alphas.size() < static_cast<std::size_t>(n) + 1) {
    throw Error(Errc::InsufficientRecurrence,
                "degree " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                    " Verblunsky coefficients, got " + std::to_string(alphas.size()));
  }
  const cplx zc = z.value();
  const std::size_t m = static_cast<std::size_t>(n) + 2;
  CircleEval out;
  out.phi.resize(m);
  out.phi_star.resize(m);
  out.dphi.resize(m);
  out.dphi_star.resize(m);
  out.phi[0] = out.phi_star[0] = 1.0;
  out.dphi[0] = out.dphi_star[0] = 0.0;
  // Monic recurrence, normalized on the fly: with phi_j orthonormal,
  // phi_{j+1} = (z phi_j - conj(alpha) phi*_j) / sqrt(1 - |alpha|^2).
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const cplx alpha = alphas.alphas[j];
    const double scale = 1.0 / std::sqrt(1.0 - std::norm(alpha));
    const cplx p = out.phi[j], s = out.phi_star[j];
    const cplx dp = out.dphi[j], ds = out.dphi_star[j];
    const cplx zp = zc * p;
    const cplx dzp = p + zc * dp;
    out.phi[j + 1] = (zp - std::conj(alpha) * s) * scale;
    out.phi_star[j + 1] = (s - alpha * zp) * scale;
    out.dphi[j + 1] = (dzp - std::conj(alpha) * ds) * scale;
    out.dphi_star[j + 1] = (ds - alpha * dzp) * scale;
  }
  return out;
}

namespace {

// phi_{n+1}, phi*_{n+1} and their derivatives in extended precision. The
// quotients below divide differences of nearly equal squares by 1 - |z|^2,
// which costs several digits in double.
struct CircleTail {
  std::complex<long double> p, s, dp, ds;
};

CircleTail circle_tail(const VerblunskyCoefficients& alphas, int n, ComplexPoint z) {
  using C = std::complex<long double>;
  const C zc{z.re, z.im};
  C p = 1.0L, s = 1.0L, dp = 0.0L, ds = 0.0L;
  for (int j = 0; j <= n; ++j) {
    const C alpha{alphas.alphas[j].real(), alphas.alphas[j].imag()};
    const long double scale = 1.0L / std::sqrt(1.0L - std::norm(alpha));
    const C zp = zc * p;
    const C dzp = p + zc * dp;
    const C np = (zp - std::conj(alpha) * s) * scale;
    const C ns = (s - alpha * zp) * scale;
    const C ndp = (dzp - std::conj(alpha) * ds) * scale;
    const C nds = (ds - alpha * dzp) * scale;
    p = np;
    s = ns;
    dp = ndp;
    ds = nds;
  }
  return {p, s, dp, ds};
}

}  // namespace

KernelTriple kernels_cd_circle(const VerblunskyCoefficients& alphas, int n, ComplexPoint z) {
  const double rho_d = 1.0 - z.abs2();
  if (std::abs(rho_d) < kUnitCircleSwitch) {
    CircleEval ev = eval_op_circle(alphas, n, z);
    ev.phi.resize(n + 1);
    ev.dphi.resize(n + 1);
    return kernels_from(BasisEval{std::move(ev.phi), std::move(ev.dphi)});
  }
  alphas.validate();
  if (n < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  if (alphas.size() < static_cast<std::size_t>(n) + 1) {
    throw Error(Errc::InsufficientRecurrence,
                "degree " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                    " Verblunsky coefficients, got " + std::to_string(alphas.size()));
  }
  using C = std::complex<long double>;
  const CircleTail t = circle_tail(alphas, n, z);
  const C zc{z.re, z.im};
  const long double rho = 1.0L - (static_cast<long double>(z.re) * z.re +
                                  static_cast<long double>(z.im) * z.im);
  const long double b0 = (std::norm(t.s) - std::norm(t.p)) / rho;
  const C conj_b1 = (std::conj(t.ds) * t.s - std::conj(t.dp) * t.p) / rho + zc * b0 / rho;
  const C b1 = std::conj(conj_b1);
  const long double b2 =
      (std::norm(t.ds) - std::norm(t.dp)) / rho + 2.0L * (zc * b1).real() / rho + b0 / rho;
  KernelTriple kt;
  kt.b0 = static_cast<double>(b0);
  kt.b1 = cplx{static_cast<double>(b1.real()), static_cast<double>(b1.imag())};
  kt.b2 = static_cast<double>(b2);
  return kt;
}

double density_op_circle(const VerblunskyCoefficients& alphas, int n, Level level, ComplexPoint z) {
  return density(kernels_cd_circle(alphas, n, z), level);
}

double density_op_circle_expanded(const VerblunskyCoefficients& alphas, int n, Level level,
                                  ComplexPoint z) {
  const double rho = 1.0 - z.abs2();
  if (std::abs(rho) < kUnitCircleSwitch) {
    throw Error(Errc::NearUnitCircle, "expanded form is singular on |z| = 1", z);
  }
  const CircleEval ev = eval_op_circle(alphas, n, z);
  const cplx zc = z.value();
  const cplx s = ev.phi_star[n + 1], p = ev.phi[n + 1];
  const cplx ds = ev.dphi_star[n + 1], dp = ev.dphi[n + 1];
  const double half_k2 = level.norm2() / 2.0;
  const double gap = std::norm(s) - std::norm(p);  // |phi*|^2 - |phi|^2

  const double zero_level = 1.0 / (rho * rho) - std::norm(s * dp - ds * p) / (gap * gap);
  const double level_term =
      rho * std::norm(std::conj(ds) * s - std::conj(dp) * p) / (gap * gap * gap) +
      2.0 * (zc * (ds * std::conj(s) - dp * std::conj(p))).real() / (gap * gap) +
      z.abs2() / (rho * gap);
  return std::exp(-half_k2 * rho / gap) * (zero_level + half_k2 * level_term) / std::numbers::pi;
}

}  // namespace zcross
