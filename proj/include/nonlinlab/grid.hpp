#ifndef NONLINLAB_GRID_HPP
#define NONLINLAB_GRID_HPP

#include <functional>
#include <string>
#include <vector>

#include "nonlinlab/point2.hpp"

namespace nonlinlab {

enum class GridKind { Rectangular, PolarAnnulus };

/// Structured tensor-product grid on a rectangle or a polar annulus.
///
/// Rectangular: nodes (x_i, y_j), i < nx, j < ny, spacing (x1-x0)/(nx-1).
/// Polar annulus: nodes (r_i, theta_j) with r in [a,b], a > 0, and theta
/// periodic on [0, 2pi) -- theta_j = j * 2pi/ny with no duplicate seam node.
struct Grid2D {
  GridKind kind = GridKind::Rectangular;
  double x0 = 0.0, x1 = 1.0;  // x range; for polar: radii a < b
  double y0 = 0.0, y1 = 1.0;  // y range; for polar fixed to [0, 2pi)
  int nx = 3, ny = 3;

  static Grid2D rectangular(double x0, double x1, double y0, double y1, int nx, int ny);
  static Grid2D polar_annulus(double a, double b, int nr, int ntheta);

  bool polar() const { return kind == GridKind::PolarAnnulus; }
  int node_count() const { return nx * ny; }
  double hx() const { return (x1 - x0) / (nx - 1); }
  double hy() const;  // theta spacing is 2pi/ny on polar grids

  int index(int i, int j) const;  // j wraps on polar grids
  double xcoord(int i) const { return x0 + i * hx(); }
  double ycoord(int j) const { return y0 + j * hy(); }
  double r(int i) const { return xcoord(i); }
  double theta(int j) const { return j * hy(); }
  Point2 position(int i, int j) const;  // cartesian
  bool is_boundary(int i, int j) const;

  bool same_as(const Grid2D& o) const;
};

/// Real-valued samples on every node of a Grid2D.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(Grid2D grid, std::vector<double> values);
  explicit ScalarField(Grid2D grid, double fill = 0.0);

  /// Sample a callable of cartesian coordinates.
  static ScalarField sample(const Grid2D& grid, const std::function<double(double, double)>& f);
  /// Sample a callable of (r, theta); polar grids only.
  static ScalarField sample_polar(const Grid2D& grid, const std::function<double(double, double)>& f);

  const Grid2D& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  double& at(int i, int j) { return values_[grid_.index(i, j)]; }

  bool all_finite() const;
  double max_abs() const;
  ScalarField map(const std::function<double(double)>& f) const;

 private:
  Grid2D grid_;
  std::vector<double> values_;
};

/// Pair of scalar fields on one grid; carries sampled maps into R^2.
struct VectorField2 {
  ScalarField x;  // cartesian components, also on polar grids
  ScalarField y;

  const Grid2D& grid() const { return x.grid(); }
  Point2 at(int i, int j) const { return {x(i, j), y(i, j)}; }
};

/// Second-order finite-difference gradient: central at interior nodes,
/// one-sided three-point at boundary nodes; theta is differenced
/// periodically on polar grids and the result is rotated to cartesian
/// components. Exact for affine fields on rectangular grids.
VectorField2 fd_gradient(const ScalarField& u);

/// Trapezoidal area integral (r-weighted on polar grids) of u times an
/// optional weight callable of cartesian coordinates.
double integrate(const ScalarField& u, const std::function<double(double, double)>& weight = nullptr);

enum class BoundaryPart { All, Outer, Inner };

struct BoundaryIntegralOptions {
  std::function<double(double, double)> weight;  // optional
  bool times_x_dot_nu = false;                   // multiply by x . nu(x)
  BoundaryPart part = BoundaryPart::All;         // Outer/Inner select polar circles
};

/// Arc-length weighted trapezoidal integral of u's boundary trace.
double boundary_integral(const ScalarField& u, const BoundaryIntegralOptions& opts = {});

double l2_norm(const ScalarField& u);  // sqrt(integrate(u^2))

}  // namespace nonlinlab

#endif
