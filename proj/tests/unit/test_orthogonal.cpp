#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "zcross/closed_forms.hpp"
#include "zcross/error.hpp"
#include "zcross/kernels.hpp"
#include "zcross/orthogonal.hpp"

using namespace zcross;
using zcross::test::kernel_gap;
using zcross::test::rel_diff;

namespace {

KernelTriple direct_realline(const RecurrenceRealLine& rec, int n, ComplexPoint z) {
  return kernels_from(eval_op_realline(rec, n, z));
}

KernelTriple direct_circle(const VerblunskyCoefficients& a, int n, ComplexPoint z) {
  CircleEval ce = eval_op_circle(a, n, z);
  ce.phi.resize(n + 1);
  ce.dphi.resize(n + 1);
  return kernels_from(BasisEval{ce.phi, ce.dphi});
}

VerblunskyCoefficients random_alphas(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  VerblunskyCoefficients v;
  while (static_cast<int>(v.size()) < count) {
    const cplx a{0.8 * u(rng), 0.8 * u(rng)};
    if (std::abs(a) <= 0.8) v.alphas.push_back(a);
  }
  return v;
}

}  // namespace

TEST_SUITE("orthogonal") {
  TEST_CASE("orthonormal Legendre values") {
    const auto leg = RecurrenceRealLine::legendre(4);
    const auto e = eval_op_realline(leg, 1, {0, 1});
    CHECK(rel_diff(e.values[0], cplx{1 / std::sqrt(2.0), 0}) < 1e-15);
    CHECK(rel_diff(e.values[1], cplx{0, std::sqrt(1.5)}) < 1e-15);
    CHECK(rel_diff(eval_op_realline(leg, 2, {1, 0}).values[2].real(), std::sqrt(2.5)) < 1e-15);
    const auto e0 = eval_op_realline(leg, 0, {0.3, 0.2});
    CHECK(e0.values.size() == 1);
    CHECK(e0.derivatives[0] == cplx{0, 0});
  }

  TEST_CASE("short recurrences are rejected") {
    const auto leg = RecurrenceRealLine::legendre(3);
    try {
      eval_op_realline(leg, 3, {0, 1});
      FAIL("expected InsufficientRecurrence");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InsufficientRecurrence);
    }
    CHECK_THROWS_AS(eval_op_circle(VerblunskyCoefficients::constant(2, 0.1), 2, {0.5, 0}), Error);
  }

  TEST_CASE("real-line Christoffel-Darboux kernels") {
    const auto leg = RecurrenceRealLine::legendre(8);
    CHECK(rel_diff(kernels_cd_realline(leg, 1, {0, 1}).b0, 2.0) < 1e-14);
    const ComplexPoint near{1.0, 1e-9};
    CHECK(kernel_gap(kernels_cd_realline(leg, 1, near), direct_realline(leg, 1, near)) == 0.0);
    CHECK(kernels_cd_realline(leg, 0, {0, 2}).b0 == doctest::Approx(0.5).epsilon(1e-15));
    // Reference: tests/oracles/reference_values.py.
    const KernelTriple kt = kernels_cd_realline(leg, 5, {0.5, 0.5});
    CHECK(rel_diff(kt.b0, 80.759033203125) < 1e-13);
    CHECK(rel_diff(kt.b1, cplx{95.745849609375, -347.171630859375}) < 1e-13);
    CHECK(rel_diff(kt.b2, 1665.38818359375) < 1e-13);
    CHECK(rel_diff(density_op_realline(leg, 5, {3, 4}, {0.5, 0.5}), 1.0399102020237521) < 1e-12);
  }

  TEST_CASE("real-line CD equals direct sums") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const RecurrenceRealLine recs[] = {RecurrenceRealLine::legendre(21),
                                       RecurrenceRealLine::chebyshev_u(21)};
    double worst = 0.0;
    for (const auto& rec : recs) {
      for (int i = 0; i < 200; ++i) {
        ComplexPoint z{u(rng), u(rng)};
        if (std::abs(z.im) <= 1e-3) continue;
        const int n = 1 + i % 20;
        worst = std::max(worst, kernel_gap(kernels_cd_realline(rec, n, z), direct_realline(rec, n, z)));
      }
    }
    CHECK(worst <= 1e-10);
  }

  TEST_CASE("real-line symmetry and level rotation") {
    const auto leg = RecurrenceRealLine::legendre(11);
    const double a = density_op_realline(leg, 10, {0, 0}, {0.3, 0.7});
    const double b = density_op_realline(leg, 10, {0, 0}, {0.3, -0.7});
    CHECK(rel_diff(a, b) < 1e-13);
    CHECK(rel_diff(density_op_realline(leg, 5, {3, 4}, {0.5, 0.5}),
                   density_op_realline(leg, 5, {-4, 3}, {0.5, 0.5})) < 1e-15);
  }

  TEST_CASE("real-line fallback is continuous across the switch") {
    const auto leg = RecurrenceRealLine::legendre(11);
    for (int n = 1; n <= 10; ++n) {
      for (double x : {-0.9, -0.4, 0.0, 0.35, 0.9}) {
        const KernelTriple on_axis = kernels_cd_realline(leg, n, {x, 0.0});
        for (double y : {2e-6, -2e-6}) {
          CHECK(kernel_gap(kernels_cd_realline(leg, n, {x, y}), on_axis) <= 1e-4);
        }
      }
    }
  }

  TEST_CASE("expanded real-line density agrees at the zero level") {
    const auto leg = RecurrenceRealLine::legendre(12);
    const ComplexPoint z{0.4, 0.6};
    CHECK(rel_diff(density_op_realline_expanded(leg, 10, {0, 0}, z),
                   density_op_realline(leg, 10, {0, 0}, z)) < 1e-8);
    // At a nonzero level the expanded expression is a different function; the
    // gap is reported, not asserted away.
    const double gap = rel_diff(density_op_realline_expanded(leg, 10, {3, 4}, z),
                                density_op_realline(leg, 10, {3, 4}, z));
    CHECK(gap > 1e-8);
  }

  TEST_CASE("Szego recurrence values") {
    const auto free = VerblunskyCoefficients::constant(4, 0.0);
    const ComplexPoint z{0.3, -0.8};
    const CircleEval e = eval_op_circle(free, 3, z);
    for (int j = 0; j <= 4; ++j) {
      CHECK(rel_diff(e.phi[j], std::pow(z.value(), j)) < 1e-15);
      CHECK(e.phi_star[j] == cplx{1, 0});
    }
    const CircleEval e2 = eval_op_circle(VerblunskyCoefficients::constant(3, 0.0), 2, {0, 2});
    CHECK(rel_diff(e2.phi[3], cplx{0, -8}) < 1e-15);
    CHECK(rel_diff(e2.dphi[3], cplx{-12, 0}) < 1e-15);

    const CircleEval half = eval_op_circle(VerblunskyCoefficients::constant(1, 0.5), 0, {1, 0});
    const double norm = std::sqrt(0.75);
    CHECK(rel_diff(half.phi[1], cplx{0.5 / norm, 0}) < 1e-15);
    CHECK(rel_diff(half.phi_star[1], cplx{0.5 / norm, 0}) < 1e-15);
    CHECK_THROWS_AS(VerblunskyCoefficients::constant(2, 1.0).validate(), Error);
  }

  TEST_CASE("unit-circle CD kernels") {
    const auto free = VerblunskyCoefficients::constant(4, 0.0);
    CHECK(rel_diff(kernels_cd_circle(free, 3, {0.5, 0}).b0, 1.328125) < 1e-15);
    CHECK(kernel_gap(kernels_cd_circle(free, 3, {0.5, 0}), kernels_monomial_closed(3, {0.5, 0})) <
          1e-14);
    // One step with alpha = 1/2: the orthonormal CD value is the direct one.
    CHECK(rel_diff(kernels_cd_circle(VerblunskyCoefficients::constant(1, 0.5), 0, {0.5, 0}).b0,
                   1.0) < 1e-15);
    const auto half = VerblunskyCoefficients::constant(6, 0.5);
    const ComplexPoint z{0.9 * std::cos(0.3), 0.9 * std::sin(0.3)};
    const KernelTriple kt = kernels_cd_circle(half, 5, z);
    CHECK(rel_diff(kt.b0, 11.561833863192055) < 1e-13);
    CHECK(rel_diff(kt.b2, 116.83087425758978) < 1e-13);
    CHECK(rel_diff(density_op_circle(half, 5, {1, 1}, z), 0.53435741593258977) < 1e-12);
    const VerblunskyCoefficients cx{{{0.3, -0.2}, {-0.5, 0.1}, {0.0, 0.6}, {0.2, 0.2}}};
    CHECK(rel_diff(density_op_circle(cx, 3, {0, 0}, {1.4, -0.3}), 0.12863295494964589) < 1e-12);
  }

  TEST_CASE("constant alpha: CD equals direct around a circle") {
    const auto half = VerblunskyCoefficients::constant(6, 0.5);
    for (int k = 0; k < 8; ++k) {
      const double t = k * std::numbers::pi / 4;
      const ComplexPoint z{0.9 * std::cos(t), 0.9 * std::sin(t)};
      CHECK(kernel_gap(kernels_cd_circle(half, 5, z), direct_circle(half, 5, z)) <= 1e-12);
    }
  }

  TEST_CASE("unit-circle CD equals direct sums") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.8, 1.8);
    const VerblunskyCoefficients sets[] = {VerblunskyCoefficients::constant(21, 0.0),
                                           VerblunskyCoefficients::constant(21, 0.5),
                                           random_alphas(rng, 21)};
    double worst = 0.0;
    for (const auto& a : sets) {
      int taken = 0;
      while (taken < 200) {
        const ComplexPoint z{u(rng), u(rng)};
        if (std::abs(z.abs2() - 1.0) <= 1e-2) continue;
        const int n = 1 + taken % 20;
        worst = std::max(worst, kernel_gap(kernels_cd_circle(a, n, z), direct_circle(a, n, z)));
        ++taken;
      }
    }
    CHECK(worst <= 1e-10);
  }

  TEST_CASE("free case reduces to monomials") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const auto free = VerblunskyCoefficients::constant(11, 0.0);
    for (int i = 0; i < 200; ++i) {
      const ComplexPoint z{u(rng), u(rng)};
      for (Level k : {Level{0, 0}, Level{10, 10}}) {
        CHECK(rel_diff(density_op_circle(free, 10, k, z), density(kernels_monomial(10, z), k)) <=
              1e-12);
      }
    }
    CHECK(rel_diff(density_op_circle(free, 10, {0, 0}, {0.5, 0}),
                   density_zero_level(kernels_monomial_closed(10, {0.5, 0}))) < 1e-13);
  }

  TEST_CASE("expanded unit-circle density") {
    std::mt19937_64 rng(17);
    const auto a = random_alphas(rng, 9);
    for (const ComplexPoint z : {ComplexPoint{0.3, 0.5}, ComplexPoint{1.3, -0.4}}) {
      for (Level k : {Level{0, 0}, Level{2, -1}}) {
        CHECK(rel_diff(density_op_circle_expanded(a, 8, k, z), density_op_circle(a, 8, k, z)) <=
              1e-8);
      }
    }
  }
}
