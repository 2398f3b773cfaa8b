#include "zcross/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <queue>
#include <thread>
#include <vector>

#include "zcross/error.hpp"
#include "zcross/kernels.hpp"
#include "zcross/simd/radial_kernels.hpp"

namespace zcross {
namespace {

// 7-point Kronrod extension of the 3-point Gauss rule on [-1, 1]. Index 0..6
// runs from -1 to 1; the Gauss nodes sit at indices 1, 3, 5.
constexpr std::array<double, 7> kNodes = {
    -0.9604912687080202834235071, -0.7745966692414833770358531, -0.4342437493468025580020715,
    0.0,
    0.4342437493468025580020715,  0.7745966692414833770358531,  0.9604912687080202834235071};
constexpr std::array<double, 7> kKronrod = {
    0.1046562260264672651938238, 0.2684880898683334407285692, 0.4013974147759622229050518,
    0.4509165386584741423451091,
    0.4013974147759622229050518, 0.2684880898683334407285692, 0.1046562260264672651938238};
constexpr std::array<double, 7> kGauss = {
    0.0, 0.5555555555555555555555556, 0.0, 0.8888888888888888888888889,
    0.0, 0.5555555555555555555555556, 0.0};

struct Cell {
  Rect rect;
  double value = 0.0;
  double err_x = 0.0;
  double err_y = 0.0;
  std::int64_t id = 0;

  double err() const { return err_x + err_y; }
};

struct CellOrder {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.err() != b.err()) return a.err() < b.err();
    return a.id > b.id;
  }
};

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = v - carry;
    const double u = sum + t;
    carry = (u - sum) - t;
    sum = u;
  }
};

Cell integrate_cell(const DensityFn& fn, const Rect& r, std::int64_t id) {
  const double hx = 0.5 * r.width(), hy = 0.5 * r.height();
  const double cx = r.x_lo + hx, cy = r.y_lo + hy;
  std::array<std::array<double, 7>, 7> f{};  // f[row iy][col ix]
  for (int iy = 0; iy < 7; ++iy) {
    for (int ix = 0; ix < 7; ++ix) {
      const ComplexPoint z{cx + hx * kNodes[ix], cy + hy * kNodes[iy]};
      const double v = fn(z);
      if (!std::isfinite(v)) {
        throw Error(Errc::OverflowDomain, "density not finite inside integration cell", z);
      }
      f[iy][ix] = v;
    }
  }
  double kk = 0.0, gx = 0.0, gy = 0.0;
  for (int iy = 0; iy < 7; ++iy) {
    for (int ix = 0; ix < 7; ++ix) {
      kk += kKronrod[iy] * kKronrod[ix] * f[iy][ix];
      gx += kKronrod[iy] * kGauss[ix] * f[iy][ix];
      gy += kGauss[iy] * kKronrod[ix] * f[iy][ix];
    }
  }
  const double jac = hx * hy;
  Cell c;
  c.rect = r;
  c.value = jac * kk;
  c.err_x = std::abs(jac * (kk - gx));
  c.err_y = std::abs(jac * (kk - gy));
  c.id = id;
  return c;
}

constexpr std::int64_t kCellEvaluations = 49;

}  // namespace

CountResult expected_count(const DensityFn& density, const Rect& rect, double rel_tol,
                           std::int64_t max_evaluations) {
  if (!rect.well_ordered()) throw Error(Errc::InvalidArgument, "rect is not well ordered");
  if (!(rel_tol >= 1e-12 && rel_tol <= 1e-2)) {
    throw Error(Errc::InvalidArgument, "rel_tol must lie in [1e-12, 1e-2]");
  }
  std::priority_queue<Cell, std::vector<Cell>, CellOrder> queue;
  std::int64_t next_id = 0;
  std::int64_t evaluations = 0;
  double total_value = 0.0, total_err = 0.0;

  Cell root = integrate_cell(density, rect, next_id++);
  evaluations += kCellEvaluations;
  total_value = root.value;
  total_err = root.err();
  queue.push(root);

  auto exact_totals = [&](double& value, double& err) {
    // Summation in cell-id order so the result does not depend on heap layout.
    std::vector<Cell> cells;
    cells.reserve(queue.size());
    auto copy = queue;
    while (!copy.empty()) {
      cells.push_back(copy.top());
      copy.pop();
    }
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.id < b.id; });
    KahanSum v, e;
    for (const Cell& c : cells) {
      v.add(c.value);
      e.add(c.err());
    }
    value = v.sum;
    err = e.sum;
  };

  bool exceeded = false;
  for (;;) {
    if (total_err <= rel_tol * std::abs(total_value)) {
      double v = 0.0, e = 0.0;
      exact_totals(v, e);
      total_value = v;
      total_err = e;
      if (total_err <= rel_tol * std::abs(total_value)) break;
    }
    if (evaluations + 2 * kCellEvaluations > max_evaluations) {
      exceeded = true;
      break;
    }
    Cell worst = queue.top();
    queue.pop();
    Rect a = worst.rect, b = worst.rect;
    if (worst.err_y > worst.err_x) {
      const double mid = 0.5 * (worst.rect.y_lo + worst.rect.y_hi);
      a.y_hi = mid;
      b.y_lo = mid;
    } else {
      const double mid = 0.5 * (worst.rect.x_lo + worst.rect.x_hi);
      a.x_hi = mid;
      b.x_lo = mid;
    }
    Cell ca = integrate_cell(density, a, next_id++);
    Cell cb = integrate_cell(density, b, next_id++);
    evaluations += 2 * kCellEvaluations;
    total_value += ca.value + cb.value - worst.value;
    total_err += ca.err() + cb.err() - worst.err();
    queue.push(ca);
    queue.push(cb);
  }

  CountResult out;
  double v = 0.0, e = 0.0;
  exact_totals(v, e);
  out.value = std::max(v, 0.0);
  out.err_estimate = e;
  out.evaluations = evaluations;
  out.budget_exceeded = exceeded;
  return out;
}

CountResult expected_count_annulus(const DensityFn& density, double r_lo, double r_hi,
                                   double rel_tol, std::int64_t max_evaluations) {
  if (!(r_lo >= 0.0 && r_lo < r_hi)) {
    throw Error(Errc::InvalidArgument, "annulus needs 0 <= r_lo < r_hi");
  }
  const DensityFn polar = [&density](ComplexPoint p) {
    const double r = p.re, t = p.im;
    return r * density(ComplexPoint{r * std::cos(t), r * std::sin(t)});
  };
  return expected_count(polar, Rect{r_lo, r_hi, 0.0, 2.0 * std::numbers::pi}, rel_tol,
                        max_evaluations);
}

DensityGrid density_grid(const DensityFn& density, const Rect& rect, int nx, int ny) {
  if (nx < 1 || ny < 1) throw Error(Errc::InvalidArgument, "grid dimensions must be positive");
  if (!rect.well_ordered()) throw Error(Errc::InvalidArgument, "rect is not well ordered");
  DensityGrid g{rect, nx, ny, std::vector<double>(static_cast<std::size_t>(nx) * ny)};
  for (int i = 0; i < ny; ++i) {
    for (int j = 0; j < nx; ++j) g.at(i, j) = density(ComplexPoint{g.x_center(j), g.y_center(i)});
  }
  return g;
}

DensityGrid density_grid_for(const BasisFamily& family, int n, Level level, const Rect& rect,
                             int nx, int ny, int threads) {
  if (nx < 1 || ny < 1) throw Error(Errc::InvalidArgument, "grid dimensions must be positive");
  if (!rect.well_ordered()) throw Error(Errc::InvalidArgument, "rect is not well ordered");
  DensityGrid g{rect, nx, ny, std::vector<double>(static_cast<std::size_t>(nx) * ny)};

  const bool radial = is_weighted_monomial(family);
  simd::RadialCoefficients coeffs;
  if (radial) {
    const auto w = monomial_weights(family, n);
    coeffs = simd::RadialCoefficients::from_weights(w);
  }

  auto fill_row = [&](int i) {
    const double y = g.y_center(i);
    if (radial) {
      std::vector<double> xs(nx), ys(nx, y);
      std::vector<KernelTriple> kt(nx);
      for (int j = 0; j < nx; ++j) xs[j] = g.x_center(j);
      simd::radial_kernels(coeffs, xs, ys, kt);
      for (int j = 0; j < nx; ++j) g.at(i, j) = density(kt[j], level);
    } else {
      for (int j = 0; j < nx; ++j) {
        g.at(i, j) = density_at(family, n, level, ComplexPoint{g.x_center(j), y});
      }
    }
  };

  const int workers = std::max(1, std::min(threads, ny));
  if (workers == 1) {
    for (int i = 0; i < ny; ++i) fill_row(i);
    return g;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < ny; i += workers) fill_row(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return g;
}

}  // namespace zcross
