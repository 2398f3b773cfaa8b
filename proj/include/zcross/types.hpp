#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace zcross {

using cplx = std::complex<double>;

/// A point z = x + iy of the complex plane.
struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;

  constexpr ComplexPoint() = default;
  constexpr ComplexPoint(double r, double i) : re(r), im(i) {}
  explicit ComplexPoint(cplx z) : re(z.real()), im(z.imag()) {}

  cplx value() const { return {re, im}; }
  double abs2() const { return re * re + im * im; }
  bool finite() const { return std::isfinite(re) && std::isfinite(im); }
};

/// Target level K = K1 + iK2 of the equation S_N(z) = K.
struct Level {
  double k1 = 0.0;
  double k2 = 0.0;

  double norm2() const { return k1 * k1 + k2 * k2; }
  cplx value() const { return {k1, k2}; }
};

/// (B0, B1, B2) = (sum |f_j|^2, sum conj(f_j) f_j', sum |f_j'|^2) at one point.
struct KernelTriple {
  double b0 = 0.0;
  cplx b1{};
  double b2 = 0.0;
};

struct Rect {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;

  double width() const { return x_hi - x_lo; }
  double height() const { return y_hi - y_lo; }
  double area() const { return width() * height(); }
  bool well_ordered() const { return x_lo < x_hi && y_lo < y_hi; }
  // Half-open on both axes.
  bool contains(ComplexPoint z) const {
    return z.re >= x_lo && z.re < x_hi && z.im >= y_lo && z.im < y_hi;
  }
};

/// Cell-centered samples over a rectangle, row-major with row i at
/// y_lo + (i + 0.5) dy and column j at x_lo + (j + 0.5) dx.
struct DensityGrid {
  Rect rect;
  int nx = 0;
  int ny = 0;
  std::vector<double> values;

  double dx() const { return rect.width() / nx; }
  double dy() const { return rect.height() / ny; }
  double x_center(int j) const { return rect.x_lo + (j + 0.5) * dx(); }
  double y_center(int i) const { return rect.y_lo + (i + 0.5) * dy(); }
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * nx + j]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * nx + j]; }
};

}  // namespace zcross
