#include "nonlinlab/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace nonlinlab {

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 40);
}

Nonlinearity Nonlinearity::from_f(std::function<double(double)> f, std::string label) {
  Nonlinearity nl;
  nl.f = f;
  nl.F = [f](double x) { return adaptive_simpson(f, 0.0, x); };
  nl.label = std::move(label);
  return nl;
}

Nonlinearity Nonlinearity::minus_sine() {
  Nonlinearity nl;
  nl.f = [](double u) { return -std::sin(u); };
  nl.F = [](double u) { return std::cos(u) - 1.0; };
  nl.df = [](double u) { return -std::cos(u); };
  nl.label = "minus_sine";
  nl.sup_F_nonpositive = true;  // sup F = 0
  nl.odd = true;
  return nl;
}

Nonlinearity Nonlinearity::linear() {
  Nonlinearity nl;
  nl.f = [](double u) { return u; };
  nl.F = [](double u) { return 0.5 * u * u; };
  nl.df = [](double) { return 1.0; };
  nl.label = "linear";
  nl.odd = true;
  return nl;
}

Nonlinearity Nonlinearity::quintic() {
  Nonlinearity nl;
  nl.f = [](double u) { return u * u * u * u * u; };
  nl.F = [](double u) { return std::pow(u, 6) / 6.0; };
  nl.df = [](double u) { return 5.0 * std::pow(u, 4); };
  nl.label = "quintic";
  nl.odd = true;
  return nl;
}

Nonlinearity Nonlinearity::cubic_minus_linear() {
  Nonlinearity nl;
  nl.f = [](double u) { return u * u * u - u; };
  nl.F = [](double u) { return 0.25 * std::pow(u, 4) - 0.5 * u * u; };
  nl.df = [](double u) { return 3.0 * u * u - 1.0; };
  nl.label = "cubic_minus_linear";
  nl.odd = true;
  return nl;
}

double Nonlinearity::derivative(double u) const {
  if (df) return df(u);
  const double h = 1e-6 * (1.0 + std::abs(u));
  return (f(u + h) - f(u - h)) / (2.0 * h);
}

double Nonlinearity::primitive_mismatch(double lo, double hi, int samples) const {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double x = lo + (hi - lo) * (k + 0.5) / samples;
    const double h = 1e-5 * (1.0 + std::abs(x));
    const double d1 = (F(x + h) - F(x - h)) / (2.0 * h);
    const double d2 = (F(x + h / 2.0) - F(x - h / 2.0)) / h;
    const double deriv = (4.0 * d2 - d1) / 3.0;  // Richardson
    worst = std::max(worst, std::abs(deriv - f(x)));
  }
  return worst;
}

void RadialProfile::dump_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  out << "r,u,du,I\n";
  out.precision(17);
  for (size_t k = 0; k < r.size(); ++k)
    out << r[k] << ',' << u[k] << ',' << du[k] << ',' << energy[k] << '\n';
}

RadialProfile radial_shoot(int n, double a, double b, double lambda, const Nonlinearity& nl,
                           double s, int steps) {
  if (steps < 100) throw std::invalid_argument("radial_shoot: steps must be >= 100");
  if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("radial_shoot: need 0 < a < b");
  if (n < 2) throw std::invalid_argument("radial_shoot: dimension n >= 2");

  constexpr double kBlowup = 1e8;
  RadialProfile prof;
  prof.n = n;
  prof.a = a;
  prof.b = b;
  prof.lambda = lambda;
  prof.s = s;
  prof.r.reserve(steps + 1);
  prof.u.reserve(steps + 1);
  prof.du.reserve(steps + 1);

  // State y = (u, u', E) with E' = u'^2 / r, so the running integral in
  // the conserved quantity carries RK4 accuracy.
  const double h = (b - a) / steps;
  std::array<double, 3> y{0.0, s, 0.0};
  std::vector<double> Etrace;
  Etrace.reserve(steps + 1);
  auto rhs = [&](double r, const std::array<double, 3>& y) -> std::array<double, 3> {
    return {y[1], -(n - 1) / r * y[1] - lambda * nl.f(y[0]), y[1] * y[1] / r};
  };
  auto push = [&](double r, const std::array<double, 3>& y) {
    prof.r.push_back(r);
    prof.u.push_back(y[0]);
    prof.du.push_back(y[1]);
    Etrace.push_back(y[2]);
  };
  push(a, y);

  for (int k = 0; k < steps; ++k) {
    const double r = a + k * h;
    const auto k1 = rhs(r, y);
    std::array<double, 3> y2, y3, y4;
    for (int c = 0; c < 3; ++c) y2[c] = y[c] + 0.5 * h * k1[c];
    const auto k2 = rhs(r + 0.5 * h, y2);
    for (int c = 0; c < 3; ++c) y3[c] = y[c] + 0.5 * h * k2[c];
    const auto k3 = rhs(r + 0.5 * h, y3);
    for (int c = 0; c < 3; ++c) y4[c] = y[c] + h * k3[c];
    const auto k4 = rhs(r + h, y4);
    for (int c = 0; c < 3; ++c) y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    const double rn = a + (k + 1) * h;
    push(rn, y);
    if (!std::isfinite(y[0]) || std::abs(y[0]) > kBlowup) {
      prof.blown_up = true;
      prof.blowup_r = rn;
      break;
    }
  }

  // Base point for the conservation check: first interior sign change of
  // u' (nearest node); the reported r1 refines the crossing on the cubic
  // Hermite interpolant of u'.
  const size_t m = prof.r.size();
  size_t base = 0;
  prof.r1 = a;
  for (size_t k = 0; k + 1 < m; ++k) {
    const double d0 = prof.du[k], d1 = prof.du[k + 1];
    if (k > 0 && d0 == 0.0) {
      base = k;
      prof.r1 = prof.r[k];
      break;
    }
    if (d0 * d1 < 0.0) {
      base = std::abs(d0) <= std::abs(d1) ? k : k + 1;
      // Hermite data for u' on [r_k, r_k+1]: values du, slopes u'' from the ODE.
      auto ddu = [&](size_t i) {
        return -(n - 1) / prof.r[i] * prof.du[i] - lambda * nl.f(prof.u[i]);
      };
      const double p0 = d0, p1 = d1, m0 = ddu(k) * h, m1 = ddu(k + 1) * h;
      auto hermite = [&](double t) {
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * p0 + (t3 - 2 * t2 + t) * m0 +
               (-2 * t3 + 3 * t2) * p1 + (t3 - t2) * m1;
      };
      double lo = 0.0, hi = 1.0, flo = hermite(0.0);
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi), fm = hermite(mid);
        if (flo * fm <= 0.0) hi = mid;
        else {
          lo = mid;
          flo = fm;
        }
      }
      prof.r1 = prof.r[k] + 0.5 * (lo + hi) * h;
      break;
    }
  }
  prof.base_index = static_cast<int>(base);

  prof.energy.resize(m);
  for (size_t k = 0; k < m; ++k)
    prof.energy[k] = 0.5 * prof.du[k] * prof.du[k] + (n - 1) * (Etrace[k] - Etrace[base]) +
                     lambda * nl.F(prof.u[k]);
  double drift = 0.0;
  for (size_t k = 0; k < m; ++k)
    if (std::isfinite(prof.energy[k]))
      drift = std::max(drift, std::abs(prof.energy[k] - prof.energy[base]));
  prof.energy_drift = drift;
  return prof;
}

std::vector<double> shooting_scan(int n, double a, double b, double lambda,
                                  const Nonlinearity& nl, double s_lo, double s_hi, int s_count,
                                  int steps) {
  if (s_count < 3) throw std::invalid_argument("shooting_scan: s_count must be >= 3");

  auto S = [&](double s) -> double {
    const RadialProfile p = radial_shoot(n, a, b, lambda, nl, s, steps);
    if (p.blown_up) return std::numeric_limits<double>::quiet_NaN();
    return p.u.back();
  };

  std::vector<double> svals(s_count), fvals(s_count);
  int finite = 0;
  for (int k = 0; k < s_count; ++k) {
    svals[k] = s_lo + (s_hi - s_lo) * k / (s_count - 1);
    fvals[k] = S(svals[k]);
    if (std::isfinite(fvals[k])) ++finite;
  }
  if (finite == 0) throw std::runtime_error("shooting_scan: every evaluation blew up");

  std::vector<double> roots;
  for (int k = 0; k < s_count; ++k)
    if (fvals[k] == 0.0) roots.push_back(svals[k]);

  for (int k = 0; k + 1 < s_count; ++k) {
    if (!std::isfinite(fvals[k]) || !std::isfinite(fvals[k + 1])) continue;
    if (fvals[k] == 0.0 || fvals[k + 1] == 0.0) continue;
    if (fvals[k] * fvals[k + 1] > 0.0) continue;
    double lo = svals[k], hi = svals[k + 1], flo = fvals[k];
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      const double fm = S(mid);
      if (!std::isfinite(fm)) break;
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (flo * fm < 0.0) hi = mid;
      else {
        lo = mid;
        flo = fm;
      }
    }
    double root = 0.5 * (lo + hi);
    // Secant polish pushes |S| toward round-off.
    double x0 = lo, x1 = hi, f0 = S(x0), f1 = S(x1);
    for (int it = 0; it < 8 && std::isfinite(f0) && std::isfinite(f1) && f1 != f0; ++it) {
      const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
      if (!std::isfinite(x2)) break;
      x0 = x1;
      f0 = f1;
      x1 = x2;
      f1 = S(x2);
      if (std::isfinite(f1) && std::abs(f1) < 1e-13) break;
    }
    if (std::isfinite(f1) && std::abs(f1) <= std::abs(S(root))) root = x1;
    roots.push_back(root);
  }

  for (double& r : roots)
    if (std::abs(r) <= 1e-8) r = 0.0;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) { return std::abs(x - y) <= 1e-7; }),
              roots.end());
  return roots;
}

PohozaevResult pohozaev_residual(const ScalarField& u, double lambda, const Nonlinearity& nl,
                                 int n, double boundary_tol) {
  if (!(lambda > 0.0)) throw std::invalid_argument("pohozaev_residual: lambda must be > 0");
  const Grid2D& g = u.grid();

  PohozaevResult res;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      if (g.is_boundary(i, j))
        res.boundary_trace_max = std::max(res.boundary_trace_max, std::abs(u(i, j)));
  res.boundary_warning = res.boundary_trace_max > boundary_tol;

  const VectorField2 grad = fd_gradient(u);
  ScalarField grad2(g);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      grad2.at(i, j) = grad.x(i, j) * grad.x(i, j) + grad.y(i, j) * grad.y(i, j);

  res.grad_term = 0.5 * (2.0 - n) * integrate(grad2);
  res.potential_term = n * lambda * integrate(u.map(nl.F));
  res.lhs = res.grad_term + res.potential_term;

  BoundaryIntegralOptions opts;
  opts.times_x_dot_nu = true;
  res.rhs = 0.5 * boundary_integral(grad2, opts);

  res.relative_residual = std::abs(res.lhs - res.rhs) /
                          (std::abs(res.lhs) + std::abs(res.rhs) + 1e-30);
  res.case_b_obstruction = nl.sup_F_nonpositive && n >= 2;
  return res;
}

}  // namespace nonlinlab
