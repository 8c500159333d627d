#include "nonlinlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nonlinlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Grid2D Grid2D::rectangular(double x0, double x1, double y0, double y1, int nx, int ny) {
  if (nx < 3 || ny < 3) throw std::invalid_argument("grid resolution must be >= 3 per direction");
  if (!(x1 > x0) || !(y1 > y0)) throw std::invalid_argument("grid extents must be increasing");
  Grid2D g;
  g.kind = GridKind::Rectangular;
  g.x0 = x0; g.x1 = x1; g.y0 = y0; g.y1 = y1;
  g.nx = nx; g.ny = ny;
  return g;
}

Grid2D Grid2D::polar_annulus(double a, double b, int nr, int ntheta) {
  if (nr < 3 || ntheta < 3) throw std::invalid_argument("grid resolution must be >= 3 per direction");
  if (!(a > 0.0)) throw std::invalid_argument("polar annulus needs inner radius a > 0");
  if (!(b > a)) throw std::invalid_argument("polar annulus needs b > a");
  Grid2D g;
  g.kind = GridKind::PolarAnnulus;
  g.x0 = a; g.x1 = b;
  g.y0 = 0.0; g.y1 = kTwoPi;
  g.nx = nr; g.ny = ntheta;
  return g;
}

double Grid2D::hy() const {
  if (polar()) return kTwoPi / ny;  // periodic, no seam duplicate
  return (y1 - y0) / (ny - 1);
}

int Grid2D::index(int i, int j) const {
  if (polar()) {
    j %= ny;
    if (j < 0) j += ny;
  }
  return i * ny + j;
}

Point2 Grid2D::position(int i, int j) const {
  if (polar()) {
    const double rr = r(i), th = theta(j);
    return {rr * std::cos(th), rr * std::sin(th)};
  }
  return {xcoord(i), ycoord(j)};
}

bool Grid2D::is_boundary(int i, int j) const {
  if (polar()) return i == 0 || i == nx - 1;
  return i == 0 || i == nx - 1 || j == 0 || j == ny - 1;
}

bool Grid2D::same_as(const Grid2D& o) const {
  return kind == o.kind && x0 == o.x0 && x1 == o.x1 && y0 == o.y0 && y1 == o.y1 &&
         nx == o.nx && ny == o.ny;
}

ScalarField::ScalarField(Grid2D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.node_count())
    throw std::invalid_argument("field value count must equal grid node count");
}

ScalarField::ScalarField(Grid2D grid, double fill)
    : grid_(grid), values_(static_cast<size_t>(grid.node_count()), fill) {}

ScalarField ScalarField::sample(const Grid2D& grid, const std::function<double(double, double)>& f) {
  ScalarField u(grid);
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.ny; ++j) {
      const Point2 p = grid.position(i, j);
      u.at(i, j) = f(p.x, p.y);
    }
  return u;
}

ScalarField ScalarField::sample_polar(const Grid2D& grid, const std::function<double(double, double)>& f) {
  if (!grid.polar()) throw std::invalid_argument("sample_polar requires a polar grid");
  ScalarField u(grid);
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.ny; ++j) u.at(i, j) = f(grid.r(i), grid.theta(j));
  return u;
}

bool ScalarField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

ScalarField ScalarField::map(const std::function<double(double)>& f) const {
  ScalarField out(grid_);
  for (size_t k = 0; k < values_.size(); ++k) out.values()[k] = f(values_[k]);
  return out;
}

namespace {

// Three-point one-sided derivative, second order.
inline double one_sided(double u0, double u1, double u2, double h) {
  return (-3.0 * u0 + 4.0 * u1 - u2) / (2.0 * h);
}

}  // namespace

VectorField2 fd_gradient(const ScalarField& u) {
  if (!u.all_finite()) throw std::invalid_argument("fd_gradient: non-finite values in input");
  const Grid2D& g = u.grid();
  ScalarField gx(g), gy(g);
  const double hx = g.hx(), hy = g.hy();

  if (!g.polar()) {
    for (int i = 0; i < g.nx; ++i) {
      for (int j = 0; j < g.ny; ++j) {
        double dx, dy;
        if (i == 0) dx = one_sided(u(0, j), u(1, j), u(2, j), hx);
        else if (i == g.nx - 1) dx = -one_sided(u(g.nx - 1, j), u(g.nx - 2, j), u(g.nx - 3, j), hx);
        else dx = (u(i + 1, j) - u(i - 1, j)) / (2.0 * hx);
        if (j == 0) dy = one_sided(u(i, 0), u(i, 1), u(i, 2), hy);
        else if (j == g.ny - 1) dy = -one_sided(u(i, g.ny - 1), u(i, g.ny - 2), u(i, g.ny - 3), hy);
        else dy = (u(i, j + 1) - u(i, j - 1)) / (2.0 * hy);
        gx.at(i, j) = dx;
        gy.at(i, j) = dy;
      }
    }
    return {gx, gy};
  }

  // Polar: d/dr as above, d/dtheta periodic central, then rotate to cartesian.
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      double ur;
      if (i == 0) ur = one_sided(u(0, j), u(1, j), u(2, j), hx);
      else if (i == g.nx - 1) ur = -one_sided(u(g.nx - 1, j), u(g.nx - 2, j), u(g.nx - 3, j), hx);
      else ur = (u(i + 1, j) - u(i - 1, j)) / (2.0 * hx);
      const double ut = (u(i, j + 1) - u(i, j - 1)) / (2.0 * hy);  // wraps
      const double r = g.r(i), th = g.theta(j);
      const double c = std::cos(th), s = std::sin(th);
      gx.at(i, j) = ur * c - (ut / r) * s;
      gy.at(i, j) = ur * s + (ut / r) * c;
    }
  }
  return {gx, gy};
}

double integrate(const ScalarField& u, const std::function<double(double, double)>& weight) {
  if (!u.all_finite()) throw std::invalid_argument("integrate: non-finite values in field");
  const Grid2D& g = u.grid();
  const double hx = g.hx(), hy = g.hy();
  double total = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    const double wx = (i == 0 || i == g.nx - 1) ? 0.5 : 1.0;
    for (int j = 0; j < g.ny; ++j) {
      double w;
      if (g.polar()) {
        w = wx * g.r(i);  // theta weight is uniform (periodic)
      } else {
        const double wy = (j == 0 || j == g.ny - 1) ? 0.5 : 1.0;
        w = wx * wy;
      }
      double v = u(i, j);
      if (weight) {
        const Point2 p = g.position(i, j);
        const double wv = weight(p.x, p.y);
        if (!std::isfinite(wv)) throw std::invalid_argument("integrate: weight returned non-finite value");
        v *= wv;
      }
      total += w * v;
    }
  }
  return total * hx * hy;
}

double boundary_integral(const ScalarField& u, const BoundaryIntegralOptions& opts) {
  if (!u.all_finite()) throw std::invalid_argument("boundary_integral: non-finite values in field");
  const Grid2D& g = u.grid();

  auto sample = [&](int i, int j, double xnu) {
    double v = u(i, j);
    if (opts.weight) {
      const Point2 p = g.position(i, j);
      const double wv = opts.weight(p.x, p.y);
      if (!std::isfinite(wv)) throw std::invalid_argument("boundary_integral: weight returned non-finite value");
      v *= wv;
    }
    if (opts.times_x_dot_nu) v *= xnu;
    return v;
  };

  if (g.polar()) {
    // Circles r = b (outer, x.nu = b) and r = a (inner, x.nu = -a).
    double total = 0.0;
    const double ht = g.hy();
    if (opts.part != BoundaryPart::Inner) {
      const double b = g.x1;
      double s = 0.0;
      for (int j = 0; j < g.ny; ++j) s += sample(g.nx - 1, j, b);
      total += s * b * ht;
    }
    if (opts.part != BoundaryPart::Outer) {
      const double a = g.x0;
      double s = 0.0;
      for (int j = 0; j < g.ny; ++j) s += sample(0, j, -a);
      total += s * a * ht;
    }
    return total;
  }

  if (opts.part != BoundaryPart::All)
    throw std::invalid_argument("boundary part selection applies to polar grids only");

  // Four edges of the rectangle; trapezoid along each, corners half-weighted per edge.
  const double hx = g.hx(), hy = g.hy();
  double total = 0.0;
  for (int j = 0; j < g.ny; ++j) {  // left (nu = (-1,0)) and right (nu = (1,0))
    const double w = (j == 0 || j == g.ny - 1) ? 0.5 : 1.0;
    total += w * hy * sample(0, j, -g.x0);
    total += w * hy * sample(g.nx - 1, j, g.x1);
  }
  for (int i = 0; i < g.nx; ++i) {  // bottom (nu = (0,-1)) and top (nu = (0,1))
    const double w = (i == 0 || i == g.nx - 1) ? 0.5 : 1.0;
    total += w * hx * sample(i, 0, -g.y0);
    total += w * hx * sample(i, g.ny - 1, g.y1);
  }
  return total;
}

double l2_norm(const ScalarField& u) {
  double q = integrate(u.map([](double v) { return v * v; }));
  return std::sqrt(std::max(0.0, q));
}

}  // namespace nonlinlab
