#include "nonlinlab/monge_ampere.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace nonlinlab {

MADomain MADomain::square(const Grid2D& rectangular) {
  if (rectangular.polar()) throw std::invalid_argument("MADomain: rectangular grid required");
  MADomain d;
  d.grid = rectangular;
  d.shape = Shape::Square;
  return d;
}

MADomain MADomain::disk(double cx, double cy, double radius, int n) {
  MADomain d;
  // Bounding square with one spare cell so disk nodes never touch the edge.
  const double pad = 1.05 * radius;
  d.grid = Grid2D::rectangular(cx - pad, cx + pad, cy - pad, cy + pad, n, n);
  d.shape = Shape::Disk;
  d.cx = cx;
  d.cy = cy;
  d.radius = radius;
  return d;
}

bool MADomain::is_interior(int i, int j) const {
  if (i <= 0 || i >= grid.nx - 1 || j <= 0 || j >= grid.ny - 1) return false;
  if (shape == Shape::Square) return true;
  const Point2 p = grid.position(i, j);
  const double dx = p.x - cx, dy = p.y - cy;
  return dx * dx + dy * dy < radius * radius;
}

bool MADomain::is_boundary_ring(int i, int j) const {
  if (shape == Shape::Square) return grid.is_boundary(i, j);
  if (!is_interior(i, j)) return false;
  for (int di = -1; di <= 1; ++di)
    for (int dj = -1; dj <= 1; ++dj)
      if ((di || dj) && !is_interior(i + di, j + dj)) return true;
  return false;
}

namespace {

struct Unknowns {
  std::vector<int> node_of;              // unknown -> linear node index
  std::vector<int> unknown_of;           // linear node index -> unknown or -1
  int count = 0;
};

Unknowns number_unknowns(const MADomain& dom) {
  const Grid2D& g = dom.grid;
  Unknowns u;
  u.unknown_of.assign(g.node_count(), -1);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      if (dom.is_interior(i, j)) {
        u.unknown_of[g.index(i, j)] = u.count++;
        u.node_of.push_back(g.index(i, j));
      }
  return u;
}

ScalarField with_boundary(const MADomain& dom, const std::function<double(double, double)>& boundary) {
  const Grid2D& g = dom.grid;
  ScalarField u(g, 0.0);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      if (!dom.is_interior(i, j)) {
        const Point2 p = g.position(i, j);
        const double v = boundary(p.x, p.y);
        if (!std::isfinite(v)) throw std::invalid_argument("solve_ma: non-finite boundary data");
        u.at(i, j) = v;
      }
  return u;
}

void scatter(const MADomain&, const Unknowns& idx, const Eigen::VectorXd& x, ScalarField& u) {
  for (int k = 0; k < idx.count; ++k) u.values()[idx.node_of[k]] = x[k];
}

// Linear initializer: Delta u = 2 sqrt(h), same Dirichlet data.
Eigen::VectorXd poisson_init(const MADomain& dom, const Unknowns& idx, const ScalarField& h,
                             const ScalarField& bdata) {
  const Grid2D& g = dom.grid;
  const double hx = g.hx(), hy = g.hy();
  const double cx = 1.0 / (hx * hx), cy = 1.0 / (hy * hy);
  SparseSystem sys(idx.count);
  for (int k = 0; k < idx.count; ++k) {
    const int node = idx.node_of[k];
    const int i = node / g.ny, j = node % g.ny;
    double rhs = 2.0 * std::sqrt(std::max(0.0, h(i, j)));
    sys.add(k, k, -2.0 * (cx + cy));
    const int nbr[4][2] = {{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}};
    const double coef[4] = {cx, cx, cy, cy};
    for (int t = 0; t < 4; ++t) {
      const int uk = idx.unknown_of[g.index(nbr[t][0], nbr[t][1])];
      if (uk >= 0) sys.add(k, uk, coef[t]);
      else rhs -= coef[t] * bdata(nbr[t][0], nbr[t][1]);
    }
    sys.rhs[k] = rhs;
  }
  return sys.solve();
}

}  // namespace

double convexity_margin(const ScalarField& u, const MADomain& dom) {
  const Grid2D& g = dom.grid;
  const double hx = g.hx(), hy = g.hy();
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 1; i < g.nx - 1; ++i)
    for (int j = 1; j < g.ny - 1; ++j) {
      if (!dom.is_interior(i, j)) continue;
      const double uxx = (u(i + 1, j) - 2.0 * u(i, j) + u(i - 1, j)) / (hx * hx);
      const double uyy = (u(i, j + 1) - 2.0 * u(i, j) + u(i, j - 1)) / (hy * hy);
      const double uxy = (u(i + 1, j + 1) - u(i + 1, j - 1) - u(i - 1, j + 1) + u(i - 1, j - 1)) /
                         (4.0 * hx * hy);
      const double mean = 0.5 * (uxx + uyy);
      const double disc = std::sqrt(0.25 * (uxx - uyy) * (uxx - uyy) + uxy * uxy);
      margin = std::min(margin, mean - disc);
    }
  return margin;
}

MASolution solve_ma(const MADomain& dom, const ScalarField& h,
                    const std::function<double(double, double)>& boundary, double tol,
                    int max_iter) {
  const Grid2D& g = dom.grid;
  if (!h.grid().same_as(g)) throw std::invalid_argument("solve_ma: h lives on another grid");
  for (double v : h.values())
    if (!(v >= 0.0)) throw std::invalid_argument("solve_ma: h must be nonnegative nodewise");

  const Unknowns idx = number_unknowns(dom);
  if (idx.count == 0) throw std::invalid_argument("solve_ma: no interior nodes");
  ScalarField bdata = with_boundary(dom, boundary);

  const double hx = g.hx(), hy = g.hy();
  const double cxx = 1.0 / (hx * hx), cyy = 1.0 / (hy * hy), cxy = 1.0 / (4.0 * hx * hy);

  ScalarField work = bdata;
  auto hessian_terms = [&](const ScalarField& u, int i, int j, double& uxx, double& uyy,
                           double& uxy) {
    uxx = (u(i + 1, j) - 2.0 * u(i, j) + u(i - 1, j)) * cxx;
    uyy = (u(i, j + 1) - 2.0 * u(i, j) + u(i, j - 1)) * cyy;
    uxy = (u(i + 1, j + 1) - u(i + 1, j - 1) - u(i - 1, j + 1) + u(i - 1, j - 1)) * cxy;
  };

  VecResidualFn residual = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    scatter(dom, idx, x, work);
    Eigen::VectorXd r(idx.count);
    for (int k = 0; k < idx.count; ++k) {
      const int node = idx.node_of[k];
      const int i = node / g.ny, j = node % g.ny;
      double uxx, uyy, uxy;
      hessian_terms(work, i, j, uxx, uyy, uxy);
      r[k] = uxx * uyy - uxy * uxy - h(i, j);
    }
    return r;
  };

  VecJacobianFn jacobian = [&](const Eigen::VectorXd& x) {
    scatter(dom, idx, x, work);
    SparseSystem sys(idx.count);
    for (int k = 0; k < idx.count; ++k) {
      const int node = idx.node_of[k];
      const int i = node / g.ny, j = node % g.ny;
      double uxx, uyy, uxy;
      hessian_terms(work, i, j, uxx, uyy, uxy);
      auto put = [&](int ii, int jj, double w) {
        const int uk = idx.unknown_of[g.index(ii, jj)];
        if (uk >= 0) sys.add(k, uk, w);  // Dirichlet neighbours contribute nothing
      };
      put(i, j, -2.0 * (uyy * cxx + uxx * cyy));
      put(i + 1, j, uyy * cxx);
      put(i - 1, j, uyy * cxx);
      put(i, j + 1, uxx * cyy);
      put(i, j - 1, uxx * cyy);
      put(i + 1, j + 1, -2.0 * uxy * cxy);
      put(i - 1, j - 1, -2.0 * uxy * cxy);
      put(i + 1, j - 1, 2.0 * uxy * cxy);
      put(i - 1, j + 1, 2.0 * uxy * cxy);
    }
    return sys;
  };

  NewtonOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  NewtonResult nres = newton_solve_vec(residual, jacobian, poisson_init(dom, idx, h, bdata), opts);
  if (!nres.converged)
    throw newton_divergence("solve_ma: Newton failed to converge", nres);

  MASolution sol;
  sol.domain = dom;
  scatter(dom, idx, nres.x, bdata);
  sol.u = bdata;
  sol.residual_norm = nres.residual_norm;
  sol.convexity_margin = convexity_margin(sol.u, dom);
  sol.accepted = sol.residual_norm <= tol && sol.convexity_margin >= -10.0 * tol;
  sol.trace = nres.trace;
  return sol;
}

HullReport gradient_hull_report(const ScalarField& u, const MADomain& dom, double tol) {
  const Grid2D& g = dom.grid;
  const VectorField2 grad = fd_gradient(u);

  std::vector<TaggedPoint2> interior;
  std::vector<Point2> boundary;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const Point2 gp = grad.at(i, j);
      if (dom.is_boundary_ring(i, j)) {
        boundary.push_back(gp);
      } else if (dom.is_interior(i, j)) {
        interior.push_back({gp, static_cast<double>(g.index(i, j)), g.index(i, j)});
      }
    }
  return check_hull_property(interior, boundary, tol);
}

HullReport verify_gradient_hull(const MASolution& sol, double tol) {
  return gradient_hull_report(sol.u, sol.domain, tol);
}

JacobianExpansionResult jacobian_expansion_check(const C1Fn& u, const C1Fn& v, const C1Fn& alpha,
                                                 const C1Fn& beta, const Grid2D& grid,
                                                 std::span<const double> lambdas) {
  JacobianExpansionResult res;
  res.min_nondegeneracy = std::numeric_limits<double>::infinity();
  res.min_sign_product = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.ny; ++j) {
      const Point2 p = grid.position(i, j);
      const double ux = u.fx(p.x, p.y), uy = u.fy(p.x, p.y);
      const double vx = v.fx(p.x, p.y), vy = v.fy(p.x, p.y);
      const double ax = alpha.fx(p.x, p.y), ay = alpha.fy(p.x, p.y);
      const double bx = beta.fx(p.x, p.y), by = beta.fy(p.x, p.y);
      const double A = ux * vy - uy * vx;
      const double B = by * ux - bx * uy - ay * vx + ax * vy;
      const double C = ax * by - ay * bx;
      for (double lam : lambdas) {
        const double expansion = A * lam * lam + B * lam + C;
        const double direct = (ax + lam * ux) * (by + lam * vy) - (ay + lam * uy) * (bx + lam * vx);
        res.max_discrepancy = std::max(res.max_discrepancy, std::abs(expansion - direct));
      }
      res.min_nondegeneracy = std::min(res.min_nondegeneracy, std::abs(C) + std::abs(A));
      res.min_sign_product = std::min(res.min_sign_product, C * A);
    }
  res.hypothesis_nondegenerate = res.min_nondegeneracy > 0.0;
  res.hypothesis_sign_ok = res.min_sign_product >= 0.0;
  return res;
}

void dump_ma_csv(const MASolution& sol, const std::filesystem::path& path) {
  const Grid2D& g = sol.u.grid();
  const VectorField2 grad = fd_gradient(sol.u);
  std::ofstream out(path);
  out << "node,x,y,u,ux,uy\n";
  out.precision(17);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const Point2 p = g.position(i, j);
      out << g.index(i, j) << ',' << p.x << ',' << p.y << ',' << sol.u(i, j) << ','
          << grad.x(i, j) << ',' << grad.y(i, j) << '\n';
    }
}

}  // namespace nonlinlab
