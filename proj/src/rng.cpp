#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "zcross/error.hpp"
#include "zcross/montecarlo.hpp"

namespace zcross {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t trial, std::uint64_t j,
                           std::uint64_t lane) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ trial);
  h = splitmix64(h ^ j);
  return splitmix64(h ^ lane);
}

// Uniform on (0, 1].
double to_unit(std::uint64_t bits) {
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

std::vector<cplx> sample_coefficients(int n, std::uint64_t seed, std::int64_t trial) {
  if (n < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  std::vector<cplx> eta(static_cast<std::size_t>(n) + 1);
  const auto t = static_cast<std::uint64_t>(trial);
  for (int j = 0; j <= n; ++j) {
    const auto jj = static_cast<std::uint64_t>(j);
    const double u1 = to_unit(counter_hash(seed, t, jj, 0));
    const double u2 = to_unit(counter_hash(seed, t, jj, 1));
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    eta[j] = cplx{radius * std::cos(angle), radius * std::sin(angle)};
  }
  return eta;
}

}  // namespace zcross
