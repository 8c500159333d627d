#ifndef NONLINLAB_RADIAL_HPP
#define NONLINLAB_RADIAL_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nonlinlab/grid.hpp"

namespace nonlinlab {

/// Nonlinearity f with primitive F(x) = int_0^x f. When no closed form is
/// registered the primitive falls back to adaptive Simpson quadrature with
/// tolerance 1e-10. `sup_F_nonpositive` marks the sup F <= 0 class where
/// the boundary identity below forbids nonzero solutions on star-shaped
/// domains.
struct Nonlinearity {
  std::function<double(double)> f;
  std::function<double(double)> F;
  std::function<double(double)> df;  // optional; finite differences otherwise
  std::string label;
  bool sup_F_nonpositive = false;
  bool odd = false;

  static Nonlinearity from_f(std::function<double(double)> f, std::string label);
  static Nonlinearity minus_sine();         // f = -sin u, F = cos u - 1
  static Nonlinearity linear();             // f = u
  static Nonlinearity quintic();            // f = u^5
  static Nonlinearity cubic_minus_linear(); // f = u^3 - u

  double derivative(double u) const;
  /// Largest |F' - f| over `samples` points of [lo, hi], via Richardson
  /// differencing of F.
  double primitive_mismatch(double lo, double hi, int samples = 100) const;
};

/// Adaptive Simpson quadrature of f over [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10);

/// One trajectory of u'' + (n-1)/r u' + lambda f(u) = 0 from r = a with
/// u(a) = 0, u'(a) = s, integrated by classical RK4. The conserved quantity
/// I(r) = u'^2/2 + (n-1) int_{r_base}^{r} u'^2/t dt + lambda F(u) is carried
/// as an extra RK4 component so its drift reflects integrator error only.
struct RadialProfile {
  int n = 2;
  double a = 1.0, b = 2.0, lambda = 1.0, s = 0.0;
  std::vector<double> r, u, du, energy;
  int base_index = 0;      // node anchoring the conservation check
  double r1 = 0.0;         // first interior stationary point (refined), or a
  double energy_drift = 0.0;
  bool blown_up = false;
  double blowup_r = 0.0;

  void dump_csv(const std::filesystem::path& path) const;  // r,u,du,I
};

RadialProfile radial_shoot(int n, double a, double b, double lambda, const Nonlinearity& nl,
                           double s, int steps);

/// Roots of S(s) = u(b; s) over a uniform slope grid: every sign change is
/// bisected, tangential near-misses are not reported. Roots within 1e-8 of
/// zero collapse to the trivial slope 0. Throws when every evaluation blew
/// up.
std::vector<double> shooting_scan(int n, double a, double b, double lambda,
                                  const Nonlinearity& nl, double s_lo, double s_hi, int s_count,
                                  int steps = 2000);

struct PohozaevResult {
  double lhs = 0.0;             // (2-n)/2 int |grad u|^2 + n lambda int F(u)
  double rhs = 0.0;             // 1/2 boundary int |grad u|^2 x.nu ds
  double relative_residual = 0.0;
  double grad_term = 0.0;
  double potential_term = 0.0;
  double boundary_trace_max = 0.0;
  bool boundary_warning = false;    // u not ~0 on the boundary
  bool case_b_obstruction = false;  // sup F <= 0 and n >= 2
};

/// Residual of the integral identity constraining classical solutions of
/// -Delta u = lambda f(u) with zero boundary data on a domain star-shaped
/// about the origin.
PohozaevResult pohozaev_residual(const ScalarField& u, double lambda, const Nonlinearity& nl,
                                 int n, double boundary_tol = 1e-8);

}  // namespace nonlinlab

#endif
