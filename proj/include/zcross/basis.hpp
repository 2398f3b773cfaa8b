#pragma once

#include <string>
#include <variant>
#include <vector>

#include "zcross/recurrence.hpp"
#include "zcross/types.hpp"

namespace zcross {

struct Monomial {};
struct Weyl {};
/// f_j = sqrt(C(degree, j) / (j + 1)) z^j.
struct RootBinomial {
  int degree = 0;
};
struct FourierCos {};
/// f_j = cos(jz/2) for even j, sin((j+1)z/2) for odd j.
struct FourierSinCos {};
struct RealLineOP {
  RecurrenceRealLine rec;
};
struct CircleOP {
  VerblunskyCoefficients verblunsky;
};

using BasisFamily =
    std::variant<Monomial, Weyl, RootBinomial, FourierCos, FourierSinCos, RealLineOP, CircleOP>;

struct BasisEval {
  std::vector<cplx> values;
  std::vector<cplx> derivatives;
};

/// f_j(z) and f_j'(z) for 0 <= j <= n. Throws OverflowDomain when a value is
/// not representable.
BasisEval eval_basis(const BasisFamily& family, int n, ComplexPoint z);

std::string family_name(const BasisFamily& family);

/// True for the families with f_j = w_j z^j (Monomial, Weyl, RootBinomial).
bool is_weighted_monomial(const BasisFamily& family);

/// The weights w_j, 0 <= j <= n, of a weighted-monomial family.
std::vector<double> monomial_weights(const BasisFamily& family, int n);

/// Trigonometric families: the largest frequency m among f_0..f_n.
int max_frequency(const BasisFamily& family, int n);

}  // namespace zcross
