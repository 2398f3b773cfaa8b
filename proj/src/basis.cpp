#include "zcross/basis.hpp"

#include <cmath>
#include <sstream>

#include "zcross/error.hpp"
#include "zcross/orthogonal.hpp"

namespace zcross {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_finite(const BasisEval& eval, ComplexPoint z) {
  for (std::size_t j = 0; j < eval.values.size(); ++j) {
    const cplx f = eval.values[j];
    const cplx df = eval.derivatives[j];
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag()) || !std::isfinite(df.real()) ||
        !std::isfinite(df.imag())) {
      std::ostringstream msg;
      msg << "basis term j=" << j << " not representable at z=(" << z.re << ", " << z.im << ")";
      throw Error(Errc::OverflowDomain, msg.str(), z);
    }
  }
}

BasisEval eval_weighted_monomial(const std::vector<double>& w, cplx z) {
  const std::size_t terms = w.size();
  BasisEval out;
  out.values.resize(terms);
  out.derivatives.resize(terms);
  cplx power = 1.0;       // z^j
  cplx prev_power = 0.0;  // z^{j-1}
  for (std::size_t j = 0; j < terms; ++j) {
    out.values[j] = w[j] * power;
    out.derivatives[j] = w[j] * static_cast<double>(j) * prev_power;
    prev_power = power;
    power *= z;
  }
  return out;
}

BasisEval eval_trig(bool sincos, int n, cplx z) {
  BasisEval out;
  out.values.resize(n + 1);
  out.derivatives.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    if (!sincos) {
      const double m = j;
      out.values[j] = std::cos(m * z);
      out.derivatives[j] = -m * std::sin(m * z);
    } else if (j % 2 == 0) {
      const double m = j / 2;
      out.values[j] = std::cos(m * z);
      out.derivatives[j] = -m * std::sin(m * z);
    } else {
      const double m = (j + 1) / 2;
      out.values[j] = std::sin(m * z);
      out.derivatives[j] = m * std::cos(m * z);
    }
  }
  return out;
}

}  // namespace

std::vector<double> monomial_weights(const BasisFamily& family, int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 1.0);
  std::visit(overloaded{
                 [](const Monomial&) {},
                 [&](const Weyl&) {
                   for (int j = 1; j <= n; ++j) w[j] = w[j - 1] / std::sqrt(static_cast<double>(j));
                 },
                 [&](const RootBinomial& rb) {
                   if (n > rb.degree) {
                     throw Error(Errc::InvalidArgument,
                                 "root-binomial basis of degree " + std::to_string(rb.degree) +
                                     " has no term " + std::to_string(n));
                   }
                   double binom = 1.0;
                   for (int j = 0; j <= n; ++j) {
                     if (j > 0) binom = binom * (rb.degree - j + 1) / j;
                     w[j] = std::sqrt(binom / (j + 1));
                   }
                 },
                 [](const auto&) {
                   throw Error(Errc::InvalidArgument, "family is not of the form w_j z^j");
                 },
             },
             family);
  return w;
}

BasisEval eval_basis(const BasisFamily& family, int n, ComplexPoint z) {
  if (n < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  if (!z.finite()) throw Error(Errc::InvalidArgument, "non-finite evaluation point");
  const cplx zc = z.value();
  BasisEval out = std::visit(
      overloaded{
          [&](const FourierCos&) { return eval_trig(false, n, zc); },
          [&](const FourierSinCos&) { return eval_trig(true, n, zc); },
          [&](const RealLineOP& op) { return eval_op_realline(op.rec, n, z); },
          [&](const CircleOP& op) {
            CircleEval ce = eval_op_circle(op.verblunsky, n, z);
            ce.phi.resize(n + 1);
            ce.dphi.resize(n + 1);
            return BasisEval{std::move(ce.phi), std::move(ce.dphi)};
          },
          [&](const auto&) { return eval_weighted_monomial(monomial_weights(family, n), zc); },
      },
      family);
  check_finite(out, z);
  return out;
}

std::string family_name(const BasisFamily& family) {
  return std::visit(overloaded{
                        [](const Monomial&) -> std::string { return "monomial"; },
                        [](const Weyl&) -> std::string { return "weyl"; },
                        [](const RootBinomial&) -> std::string { return "rootbinomial"; },
                        [](const FourierCos&) -> std::string { return "fouriercos"; },
                        [](const FourierSinCos&) -> std::string { return "fouriersincos"; },
                        [](const RealLineOP&) -> std::string { return "op-real"; },
                        [](const CircleOP&) -> std::string { return "op-circle"; },
                    },
                    family);
}

bool is_weighted_monomial(const BasisFamily& family) {
  return std::holds_alternative<Monomial>(family) || std::holds_alternative<Weyl>(family) ||
         std::holds_alternative<RootBinomial>(family);
}

int max_frequency(const BasisFamily& family, int n) {
  if (std::holds_alternative<FourierCos>(family)) return n;
  if (std::holds_alternative<FourierSinCos>(family)) return (n + 1) / 2;
  throw Error(Errc::InvalidArgument, "not a trigonometric family");
}

}  // namespace zcross
