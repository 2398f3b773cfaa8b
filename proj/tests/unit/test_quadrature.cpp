#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "zcross/closed_forms.hpp"
#include "zcross/error.hpp"
#include "zcross/kernels.hpp"
#include "zcross/quadrature.hpp"

using namespace zcross;
using zcross::test::rel_diff;

namespace {

DensityFn monomial_density(int n, Level k) {
  return [n, k](ComplexPoint z) { return density(kernels_monomial(n, z), k); };
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("constants integrate exactly") {
    const Rect r{-1.5, 2.0, 0.25, 3.0};
    const auto res = expected_count([](ComplexPoint) { return 2.5; }, r, 1e-12);
    CHECK(rel_diff(res.value, 2.5 * r.area()) <= 1e-12);
    CHECK(res.evaluations == 49);
    CHECK_FALSE(res.budget_exceeded);
  }

  TEST_CASE("Weyl limit at the zero level integrates to area / pi") {
    const Rect r{-3, 1, -0.5, 2};
    const auto res = expected_count([](ComplexPoint z) { return density_weyl_limit({0, 0}, z); },
                                    r, 1e-10);
    CHECK(rel_diff(res.value, r.area() / std::numbers::pi) <= 1e-12);
  }

  TEST_CASE("monomial count over [-4,4]^2 against the reference integral") {
    // Reference: scipy dblquad in tests/oracles/reference_values.py. About
    // 0.054 expected zeros lie outside the square.
    const Rect sq{-4, 4, -4, 4};
    const auto a = expected_count(monomial_density(10, {0, 0}), sq, 1e-4);
    CHECK(std::abs(a.value - 9.945991145615) <= 1e-4 * 9.95);
    CHECK(a.err_estimate <= 1e-4 * a.value);
    const auto b = expected_count(monomial_density(10, {10, 10}), sq, 1e-4);
    CHECK(std::abs(b.value - 9.945991145316) <= 1e-4 * 9.95);
    const auto tight = expected_count(monomial_density(10, {0, 0}), sq, 1e-9);
    CHECK(std::abs(tight.value - 9.945991145615) <= 1e-9);
  }

  TEST_CASE("annulus against the radial reference integral") {
    const auto res = expected_count_annulus(monomial_density(10, {10, 10}), 0.8, 1.25, 1e-8);
    CHECK(rel_diff(res.value, 5.4662849833724079) <= 1e-8);
    CHECK_THROWS_AS(expected_count_annulus(monomial_density(10, {0, 0}), 1.0, 0.5, 1e-6), Error);
  }

  TEST_CASE("far-away rectangle carries almost no mass") {
    const auto res = expected_count(monomial_density(10, {0, 0}), {10, 11, 10, 11}, 1e-4);
    CHECK(res.value <= 1e-4);
    CHECK(res.value >= 0.0);
  }

  TEST_CASE("additivity over congruent quarters") {
    const auto fn = monomial_density(10, {10, 10});
    const Rect r{-1.5, 1.7, -0.9, 2.1};
    const double mx = 0.5 * (r.x_lo + r.x_hi), my = 0.5 * (r.y_lo + r.y_hi);
    const auto whole = expected_count(fn, r, 1e-8);
    double sum = 0.0, err = whole.err_estimate;
    for (const Rect q : {Rect{r.x_lo, mx, r.y_lo, my}, Rect{mx, r.x_hi, r.y_lo, my},
                         Rect{r.x_lo, mx, my, r.y_hi}, Rect{mx, r.x_hi, my, r.y_hi}}) {
      const auto part = expected_count(fn, q, 1e-8);
      sum += part.value;
      err += part.err_estimate;
    }
    CHECK(std::abs(sum - whole.value) <= err);
  }

  TEST_CASE("enlarging the region never lowers the count") {
    const auto fn = monomial_density(10, {10, 10});
    double prev = 0.0;
    for (double h : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0}) {
      const double v = expected_count(fn, {-h, h, -h, h}, 1e-8).value;
      CHECK(v >= prev);
      prev = v;
    }
  }

  TEST_CASE("global count approaches the degree") {
    for (Level k : {Level{0, 0}, Level{10, 10}}) {
      double prev_gap = INFINITY;
      for (double h : {3.0, 4.0, 5.0}) {
        const double gap = 10.0 - expected_count(monomial_density(10, k), {-h, h, -h, h}, 1e-8).value;
        CHECK(gap > 0.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
      }
      CHECK(prev_gap < 0.04);
    }
  }

  TEST_CASE("budget exhaustion returns a flagged partial result") {
    const auto res = expected_count(monomial_density(10, {10, 10}), {-4, 4, -4, 4}, 1e-12, 500);
    CHECK(res.budget_exceeded);
    CHECK(res.evaluations <= 500);
    CHECK(res.value > 0.0);
  }

  TEST_CASE("tolerance outside the supported range is rejected") {
    CHECK_THROWS_AS(expected_count(monomial_density(3, {0, 0}), {0, 1, 0, 1}, 0.1), Error);
    CHECK_THROWS_AS(expected_count(monomial_density(3, {0, 0}), {0, 1, 0, 1}, 1e-13), Error);
  }

  TEST_CASE("grid layout") {
    const auto g = density_grid([](ComplexPoint z) { return z.abs2(); }, {-1, 1, -1, 1}, 2, 2);
    REQUIRE(g.values.size() == 4);
    for (double v : g.values) CHECK(v == 0.5);
    const auto h = density_grid([](ComplexPoint z) { return z.re + 10 * z.im; }, {0, 4, 0, 2}, 4, 2);
    CHECK(h.at(0, 0) == 0.5 + 5.0);
    CHECK(h.at(0, 3) == 3.5 + 5.0);
    CHECK(h.at(1, 0) == 0.5 + 15.0);
  }

  TEST_CASE("limit-density grid rises toward the unit circle") {
    const auto g = density_grid(
        [](ComplexPoint z) { return density_monomial_limit_inside({0, 0}, z); }, {-0.7, 0.7, -0.7, 0.7},
        15, 15);
    for (int j = 8; j < 15; ++j) CHECK(g.at(7, j) > g.at(7, j - 1));
  }

  TEST_CASE("radial grids are symmetric under index reflection") {
    const int n = 24;
    const auto g = density_grid_for(Weyl{}, 15, {3, 1}, {-2, 2, -2, 2}, n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(rel_diff(g.at(i, j), g.at(n - 1 - i, j)) <= 1e-13);
        CHECK(rel_diff(g.at(i, j), g.at(i, n - 1 - j)) <= 1e-13);
        CHECK(rel_diff(g.at(i, j), g.at(j, i)) <= 1e-13);
      }
    }
  }

  TEST_CASE("family grids agree with pointwise densities and ignore thread count") {
    const Rect r{-1.7, 2.3, -1.1, 1.9};
    const BasisFamily fams[] = {Monomial{}, RootBinomial{12}, FourierCos{},
                                RealLineOP{RecurrenceRealLine::legendre(13)}};
    for (const auto& fam : fams) {
      const auto g1 = density_grid_for(fam, 12, {2, 3}, r, 13, 9, 1);
      const auto g4 = density_grid_for(fam, 12, {2, 3}, r, 13, 9, 4);
      CHECK(g1.values == g4.values);
      for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 13; ++j) {
          const double ref = density_at(fam, 12, {2, 3}, {g1.x_center(j), g1.y_center(i)});
          CHECK(rel_diff(g1.at(i, j), ref) <= 1e-12);
        }
      }
    }
  }
}
