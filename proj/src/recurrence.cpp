#include "zcross/recurrence.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zcross/error.hpp"

namespace zcross {

double RecurrenceRealLine::leading(std::size_t j) const {
  if (j > rows()) throw Error(Errc::InsufficientRecurrence, "leading coefficient index out of range");
  double k = p0;
  for (std::size_t i = 0; i < j; ++i) k *= a[i];
  return k;
}

void RecurrenceRealLine::validate() const {
  if (b.size() != a.size() || c.size() != a.size()) {
    throw Error(Errc::InvalidArgument, "recurrence rows a, b, c differ in length");
  }
  if (!(p0 > 0.0) || !std::isfinite(p0)) throw Error(Errc::InvalidArgument, "p0 must be positive");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(a[j] > 0.0) || !std::isfinite(a[j]) || !std::isfinite(b[j]) || !std::isfinite(c[j])) {
      throw Error(Errc::InvalidArgument,
                  "recurrence row " + std::to_string(j) + " needs finite entries and a > 0");
    }
  }
}

RecurrenceRealLine RecurrenceRealLine::legendre(std::size_t rows) {
  // x p_j = beta_{j+1} p_{j+1} + beta_j p_{j-1},  beta_j = j / sqrt(4j^2 - 1).
  auto beta = [](double j) { return j / std::sqrt(4.0 * j * j - 1.0); };
  RecurrenceRealLine rec;
  rec.p0 = 1.0 / std::sqrt(2.0);
  rec.a.resize(rows);
  rec.b.assign(rows, 0.0);
  rec.c.resize(rows);
  for (std::size_t j = 0; j < rows; ++j) {
    const double next = beta(static_cast<double>(j + 1));
    rec.a[j] = 1.0 / next;
    rec.c[j] = j == 0 ? 0.0 : beta(static_cast<double>(j)) / next;
  }
  return rec;
}

RecurrenceRealLine RecurrenceRealLine::chebyshev_u(std::size_t rows) {
  RecurrenceRealLine rec;
  rec.p0 = std::sqrt(2.0 / std::numbers::pi);
  rec.a.assign(rows, 2.0);
  rec.b.assign(rows, 0.0);
  rec.c.assign(rows, 1.0);
  if (rows > 0) rec.c[0] = 0.0;
  return rec;
}

void VerblunskyCoefficients::validate() const {
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (!(std::abs(alphas[j]) < 1.0)) {
      throw Error(Errc::InvalidVerblunsky,
                  "|alpha_" + std::to_string(j) + "| must be below 1");
    }
  }
}

VerblunskyCoefficients VerblunskyCoefficients::constant(std::size_t count, cplx alpha) {
  return {std::vector<cplx>(count, alpha)};
}

}  // namespace zcross
