#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nonlinlab/grid.hpp"
#include "nonlinlab/solvers.hpp"

using namespace nonlinlab;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent oracle for the center value of -Lap u = 1 on the unit square
// with zero boundary data: double sine series evaluated directly.
double poisson_square_center_series() {
  double s = 0.0;
  for (int m = 1; m < 400; m += 2)
    for (int n = 1; n < 400; n += 2)
      s += std::sin(m * kPi / 2.0) * std::sin(n * kPi / 2.0) /
           (double(m) * n * (double(m) * m + double(n) * n));
  return 16.0 / std::pow(kPi, 4) * s;
}

ScalarField random_field(const Grid2D& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  ScalarField u(g);
  for (double& v : u.values()) v = U(rng);
  return u;
}

}  // namespace

TEST_CASE("grid invariants") {
  CHECK_THROWS_AS(Grid2D::rectangular(0, 1, 0, 1, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D::polar_annulus(0.0, 1.0, 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D::polar_annulus(2.0, 1.0, 8, 8), std::invalid_argument);
  const Grid2D g = Grid2D::polar_annulus(1.0, 2.0, 9, 12);
  CHECK(g.node_count() == 9 * 12);
  CHECK(g.hy() == doctest::Approx(2.0 * kPi / 12));
  // theta wraps without a seam duplicate
  CHECK(g.index(3, 12) == g.index(3, 0));
  CHECK(g.index(3, -1) == g.index(3, 11));
}

TEST_CASE("fd_gradient: constant and affine fields are exact") {
  const Grid2D g = Grid2D::rectangular(0, 1, 0, 1, 17, 13);
  const VectorField2 zero = fd_gradient(ScalarField(g, 4.2));
  CHECK(zero.x.max_abs() <= 1e-13);
  CHECK(zero.y.max_abs() <= 1e-13);

  const VectorField2 affine =
      fd_gradient(ScalarField::sample(g, [](double x, double y) { return 2.0 * x + 3.0 * y; }));
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      CHECK(affine.x(i, j) == doctest::Approx(2.0).epsilon(1e-12));
      CHECK(affine.y(i, j) == doctest::Approx(3.0).epsilon(1e-12));
    }
}

TEST_CASE("fd_gradient: x^2 derivative matches 2x at interior nodes") {
  const Grid2D g = Grid2D::rectangular(0, 1, 0, 1, 65, 65);
  const VectorField2 grad =
      fd_gradient(ScalarField::sample(g, [](double x, double) { return x * x; }));
  double worst = 0.0;
  for (int i = 1; i < g.nx - 1; ++i)
    for (int j = 1; j < g.ny - 1; ++j)
      worst = std::max(worst, std::abs(grad.x(i, j) - 2.0 * g.xcoord(i)));
  CHECK(worst <= 1e-10);
}

TEST_CASE("fd_gradient: linearity") {
  const Grid2D g = Grid2D::rectangular(-1, 1, 0, 2, 19, 23);
  const ScalarField u = random_field(g, 11), v = random_field(g, 12);
  const double a = 1.25, b = -0.75;
  ScalarField w(g);
  for (int k = 0; k < g.node_count(); ++k)
    w.values()[k] = a * u.values()[k] + b * v.values()[k];
  const VectorField2 gw = fd_gradient(w), gu = fd_gradient(u), gv = fd_gradient(v);
  double worst = 0.0;
  for (int k = 0; k < g.node_count(); ++k) {
    worst = std::max(worst, std::abs(gw.x.values()[k] - a * gu.x.values()[k] - b * gv.x.values()[k]));
    worst = std::max(worst, std::abs(gw.y.values()[k] - a * gu.y.values()[k] - b * gv.y.values()[k]));
  }
  CHECK(worst <= 1e-13 * (1.0 / g.hx()));
}

TEST_CASE("fd_gradient: polar grids produce cartesian components") {
  // u = x as a function on the annulus: gradient is (1, 0) up to O(h^2)
  const Grid2D g = Grid2D::polar_annulus(1.0, 2.0, 65, 128);
  const VectorField2 grad =
      fd_gradient(ScalarField::sample(g, [](double x, double) { return x; }));
  double worst = 0.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      worst = std::max(worst, std::abs(grad.x(i, j) - 1.0));
      worst = std::max(worst, std::abs(grad.y(i, j)));
    }
  CHECK(worst <= 5e-4);  // second order at h_theta ~ 0.05

  // radial field u = r^2/2 has gradient (x, y)
  const VectorField2 rad =
      fd_gradient(ScalarField::sample_polar(g, [](double r, double) { return 0.5 * r * r; }));
  double worst2 = 0.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const Point2 p = g.position(i, j);
      worst2 = std::max({worst2, std::abs(rad.x(i, j) - p.x), std::abs(rad.y(i, j) - p.y)});
    }
  CHECK(worst2 <= 1e-10);  // exact in r, constant in theta
}

TEST_CASE("fd_gradient rejects non-finite input") {
  const Grid2D g = Grid2D::rectangular(0, 1, 0, 1, 5, 5);
  ScalarField u(g, 0.0);
  u.values()[7] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(fd_gradient(u), std::invalid_argument);
}

TEST_CASE("newton: scalar quadratic converges to the root") {
  VecResidualFn res = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(1);
    r[0] = x[0] * x[0] - 4.0;
    return r;
  };
  VecJacobianFn jac = [](const Eigen::VectorXd& x) {
    SparseSystem sys(1);
    sys.add(0, 0, 2.0 * x[0]);
    return sys;
  };
  Eigen::VectorXd x0(1);
  x0[0] = 3.0;
  NewtonOptions opts;
  opts.tol = 1e-12;
  const NewtonResult r = newton_solve_vec(res, jac, x0, opts);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("newton: linear residual converges in one iteration") {
  const int n = 16;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n) * 4.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) += 0.3 * U(rng);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b[i] = U(rng);

  VecResidualFn res = [&](const Eigen::VectorXd& x) { return (A * x - b).eval(); };
  VecJacobianFn jac = [&](const Eigen::VectorXd&) {
    SparseSystem sys(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sys.add(i, j, A(i, j));
    return sys;
  };
  const NewtonResult r = newton_solve_vec(res, jac, Eigen::VectorXd::Zero(n), {});
  CHECK(r.converged);
  CHECK(r.iterations == 1);
}

TEST_CASE("newton: discrete Poisson center value against the series oracle") {
  const int n = 33;  // spacing 1/32
  const Grid2D g = Grid2D::rectangular(0, 1, 0, 1, n, n);
  const double h2 = g.hx() * g.hx();
  auto interior = [&](int i, int j) { return i > 0 && i < n - 1 && j > 0 && j < n - 1; };

  FieldResidualFn res = [&](const ScalarField& u) {
    ScalarField r(g, 0.0);
    for (int i = 1; i < n - 1; ++i)
      for (int j = 1; j < n - 1; ++j)
        r.at(i, j) = -(u(i + 1, j) + u(i - 1, j) + u(i, j + 1) + u(i, j - 1) - 4.0 * u(i, j)) / h2 -
                     1.0;
    return r;
  };
  FieldJacobianFn jac = [&](const ScalarField&) {
    SparseSystem sys(g.node_count());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int k = g.index(i, j);
        if (!interior(i, j)) {
          sys.add(k, k, 1.0);
          continue;
        }
        sys.add(k, k, 4.0 / h2);
        sys.add(k, g.index(i + 1, j), -1.0 / h2);
        sys.add(k, g.index(i - 1, j), -1.0 / h2);
        sys.add(k, g.index(i, j + 1), -1.0 / h2);
        sys.add(k, g.index(i, j - 1), -1.0 / h2);
      }
    return sys;
  };
  const ScalarField u = newton_solve(res, jac, ScalarField(g, 0.0), 1e-10, 10);
  const double oracle = poisson_square_center_series();
  CHECK(oracle == doctest::Approx(0.07367135126666945).epsilon(1e-9));
  CHECK(std::abs(u(16, 16) - oracle) <= 2e-3);
}

TEST_CASE("newton: iterates invariant under residual scaling") {
  VecResidualFn res = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(1);
    r[0] = std::exp(x[0]) - 3.0;
    return r;
  };
  VecJacobianFn jac = [](const Eigen::VectorXd& x) {
    SparseSystem sys(1);
    sys.add(0, 0, std::exp(x[0]));
    return sys;
  };
  const double c = 4.0;  // power of two: scaled solve reproduces iterates exactly
  VecResidualFn res_c = [&](const Eigen::VectorXd& x) { return (c * res(x)).eval(); };
  VecJacobianFn jac_c = [&](const Eigen::VectorXd& x) {
    SparseSystem sys = jac(x);
    for (auto& t : sys.triplets) t = {t.row(), t.col(), c * t.value()};
    return sys;
  };
  Eigen::VectorXd x0(1);
  x0[0] = 2.0;
  const NewtonResult r1 = newton_solve_vec(res, jac, x0, {});
  const NewtonResult r2 = newton_solve_vec(res_c, jac_c, x0, {});
  CHECK(r1.converged);
  CHECK(r2.converged);
  CHECK(std::abs(r1.x[0] - r2.x[0]) <= 1e-12);
  CHECK(r1.iterations == r2.iterations);
}

TEST_CASE("newton: divergence carries the trace") {
  FieldResidualFn res = [](const ScalarField& u) {
    return u.map([](double x) { return x * x + 1.0; });  // no real root
  };
  FieldJacobianFn jac = [](const ScalarField& u) {
    SparseSystem sys(u.grid().node_count());
    for (int k = 0; k < u.grid().node_count(); ++k) sys.add(k, k, 2.0 * u.values()[k] + 1e-3);
    return sys;
  };
  const Grid2D g = Grid2D::rectangular(0, 1, 0, 1, 3, 3);
  try {
    newton_solve(res, jac, ScalarField(g, 2.0), 1e-12, 8);
    FAIL("expected divergence");
  } catch (const newton_divergence& e) {
    CHECK(!e.result.converged);
    CHECK(e.result.trace.residual_norms.size() >= 1);
    CHECK(e.result.x.size() == g.node_count());
  }
}

TEST_CASE("integrate: unit fields over the square and the annulus") {
  const Grid2D sq = Grid2D::rectangular(0, 1, 0, 1, 33, 33);
  CHECK(integrate(ScalarField(sq, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));

  const Grid2D an = Grid2D::polar_annulus(1.0, 2.0, 256, 256);
  CHECK(std::abs(integrate(ScalarField(an, 1.0)) - 3.0 * kPi) <= 1e-6);
}

TEST_CASE("integrate: boundary integral of x.nu over the unit circle") {
  const Grid2D an = Grid2D::polar_annulus(0.1, 1.0, 64, 256);
  BoundaryIntegralOptions opts;
  opts.times_x_dot_nu = true;
  opts.part = BoundaryPart::Outer;
  CHECK(std::abs(boundary_integral(ScalarField(an, 1.0), opts) - 2.0 * kPi) <= 1e-4);
}

TEST_CASE("integrate: nonnegativity and O(h^2) refinement") {
  auto f = [](double x, double y) { return std::exp(x) * std::cos(2.0 * y) + 2.0; };
  const Grid2D g1 = Grid2D::rectangular(0, 1, 0, 1, 17, 17);
  const Grid2D g2 = Grid2D::rectangular(0, 1, 0, 1, 33, 33);
  const Grid2D g3 = Grid2D::rectangular(0, 1, 0, 1, 65, 65);
  const double exact = (std::exp(1.0) - 1.0) * std::sin(2.0) / 2.0 + 2.0;
  const double e1 = std::abs(integrate(ScalarField::sample(g1, f)) - exact);
  const double e2 = std::abs(integrate(ScalarField::sample(g2, f)) - exact);
  const double e3 = std::abs(integrate(ScalarField::sample(g3, f)) - exact);
  CHECK(integrate(ScalarField::sample(g1, f)) >= 0.0);
  CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
  CHECK(std::log2(e2 / e3) == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("boundary integral: weighted trace over the rectangle") {
  // trace of u = x over the unit-square boundary with weight y:
  // right edge: int_0^1 1*y dy = 1/2; top edge: int_0^1 x*1 dx = 1/2;
  // left edge x=0 contributes 0; bottom edge weight y=0 contributes 0.
  const Grid2D g = Grid2D::rectangular(0, 1, 0, 1, 65, 65);
  BoundaryIntegralOptions opts;
  opts.weight = [](double, double y) { return y; };
  const double val = boundary_integral(ScalarField::sample(g, [](double x, double) { return x; }),
                                       opts);
  CHECK(val == doctest::Approx(1.0).epsilon(1e-12));

  // inner circle only, with the x.nu factor: -a * 2 pi a at r = a
  const Grid2D an = Grid2D::polar_annulus(0.5, 1.0, 33, 128);
  BoundaryIntegralOptions inner;
  inner.times_x_dot_nu = true;
  inner.part = BoundaryPart::Inner;
  CHECK(boundary_integral(ScalarField(an, 1.0), inner) ==
        doctest::Approx(-2.0 * kPi * 0.25).epsilon(1e-12));
}

TEST_CASE("sample_polar requires a polar grid") {
  const Grid2D g = Grid2D::rectangular(0, 1, 0, 1, 5, 5);
  CHECK_THROWS_AS(ScalarField::sample_polar(g, [](double, double) { return 0.0; }),
                  std::invalid_argument);
}

TEST_CASE("integrate rejects non-finite weights") {
  const Grid2D g = Grid2D::rectangular(0, 1, 0, 1, 5, 5);
  CHECK_THROWS_AS(integrate(ScalarField(g, 1.0), [](double, double) {
                    return std::numeric_limits<double>::infinity();
                  }),
                  std::invalid_argument);
}
