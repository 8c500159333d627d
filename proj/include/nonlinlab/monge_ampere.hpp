#ifndef NONLINLAB_MONGE_AMPERE_HPP
#define NONLINLAB_MONGE_AMPERE_HPP

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nonlinlab/grid.hpp"
#include "nonlinlab/hull_property.hpp"
#include "nonlinlab/solvers.hpp"

namespace nonlinlab {

/// Computational domain for det(D^2 u) = h: a rectangular grid, either
/// solved on the whole rectangle or masked to the polygon of grid nodes
/// inscribed in a disk. Nodes outside the mask carry Dirichlet data.
struct MADomain {
  Grid2D grid;
  enum class Shape { Square, Disk } shape = Shape::Square;
  double cx = 0.0, cy = 0.0, radius = 1.0;

  static MADomain square(const Grid2D& rectangular);
  static MADomain disk(double cx, double cy, double radius, int n);

  bool is_interior(int i, int j) const;
  /// Interior nodes with a non-interior 8-neighbour; on squares, the grid
  /// edge nodes instead. These are the explicit boundary sample nodes.
  bool is_boundary_ring(int i, int j) const;
};

struct MASolution {
  ScalarField u;
  double residual_norm = 0.0;
  double convexity_margin = 0.0;  // smallest discrete-Hessian eigenvalue over the interior
  std::string boundary_desc;
  MADomain domain;
  bool accepted = false;  // residual <= tol and margin >= -10 tol
  NewtonTrace trace;
};

/// Damped Newton on the central 9-point discretization of
/// u_xx u_yy - u_xy^2 - h, initialized from the solution of the linear
/// problem Delta u = 2 sqrt(h) with the same boundary data.
MASolution solve_ma(const MADomain& domain, const ScalarField& h,
                    const std::function<double(double, double)>& boundary, double tol = 1e-8,
                    int max_iter = 60);

/// Hull containment report for the finite-difference gradient of any field
/// on an MA domain: interior gradient samples against the hull of the
/// boundary-ring gradient samples.
HullReport gradient_hull_report(const ScalarField& u, const MADomain& domain, double tol);

HullReport verify_gradient_hull(const MASolution& sol, double tol);

/// Smallest eigenvalue of the discrete Hessian over interior nodes.
double convexity_margin(const ScalarField& u, const MADomain& domain);

/// Scalar C^1 function with analytic first partials.
struct C1Fn {
  std::function<double(double, double)> f, fx, fy;
};

struct JacobianExpansionResult {
  double max_discrepancy = 0.0;    // |quadratic-in-lambda expansion - assembled det|
  double min_nondegeneracy = 0.0;  // min over nodes of |C| + |h|, h = u_x v_y - u_y v_x
  double min_sign_product = 0.0;   // min over nodes of C * h
  bool hypothesis_nondegenerate = false;
  bool hypothesis_sign_ok = false;
};

/// Checks det(J_{g + lambda f}) = A lambda^2 + B lambda + C nodewise for
/// f = (u, v), g = (alpha, beta), with
///   A = u_x v_y - u_y v_x,
///   B = beta_y u_x - beta_x u_y - alpha_y v_x + alpha_x v_y,
///   C = alpha_x beta_y - alpha_y beta_x,
/// and evaluates the coupled-system hypothesis fields |C| + |A| > 0 and
/// C * A >= 0.
JacobianExpansionResult jacobian_expansion_check(const C1Fn& u, const C1Fn& v, const C1Fn& alpha,
                                                 const C1Fn& beta, const Grid2D& grid,
                                                 std::span<const double> lambdas);

void dump_ma_csv(const MASolution& sol, const std::filesystem::path& path);

}  // namespace nonlinlab

#endif
