#include "nonlinlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "nonlinlab/annulus.hpp"
#include "nonlinlab/connectivity.hpp"
#include "nonlinlab/gamma_three.hpp"
#include "nonlinlab/grid.hpp"
#include "nonlinlab/hull.hpp"
#include "nonlinlab/kirchhoff.hpp"
#include "nonlinlab/minimax.hpp"
#include "nonlinlab/monge_ampere.hpp"
#include "nonlinlab/radial.hpp"

namespace nonlinlab {

namespace {

constexpr double kPi = std::numbers::pi;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

nlohmann::json config_echo(const Config& cfg) {
  nlohmann::json j;
  for (const auto& [section, entries] : cfg.sections()) {
    nlohmann::json s;
    for (const auto& [k, v] : entries) s[k] = v;
    j[section] = s;
  }
  return j;
}

ExperimentReport make_report(const ExperimentContext& ctx, const std::string& subcommand) {
  ExperimentReport rep;
  rep.subcommand = subcommand;
  rep.seed = ctx.seed;
  rep.parameters = config_echo(ctx.cfg);
  return rep;
}

double bessel_j0_first_zero() {
  auto f = [](double x) { return std::cyl_bessel_j(0.0, x); };
  double lo = 2.0, hi = 3.0, flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (flo * f(mid) <= 0.0) hi = mid;
    else {
      lo = mid;
      flo = f(lo);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<TaggedPoint2> arc_interior_samples(int n, double scale) {
  std::vector<double> thetas(n);
  for (int j = 1; j <= n; ++j) thetas[j - 1] = kPi * j / (n + 1);
  int nearest = 0;
  for (int k = 1; k < n; ++k)
    if (std::abs(thetas[k] - kPi / 2.0) < std::abs(thetas[nearest] - kPi / 2.0)) nearest = k;
  thetas[nearest] = kPi / 2.0;
  std::vector<TaggedPoint2> out(n);
  for (int k = 0; k < n; ++k)
    out[k] = {{scale * std::cos(thetas[k]), scale * std::sin(thetas[k])}, thetas[k], k};
  return out;
}

// ---------------------------------------------------------------------------
// hull-check
// ---------------------------------------------------------------------------

ExperimentReport run_hull_check(const ExperimentContext& ctx) {
  ExperimentReport rep = make_report(ctx, "hull-check");
  const int n_samples = ctx.cfg.get_int("hull-check", "arc_samples");
  const int family = ctx.cfg.get_int("hull-check", "family_size");
  const double tol = ctx.cfg.get_double("hull-check", "tol");

  {  // half-circle arc against its two endpoint images
    Stopwatch sw;
    const auto interior = arc_interior_samples(n_samples);
    const std::vector<Point2> boundary{{1.0, 0.0}, {-1.0, 0.0}};
    const HullReport hr = check_hull_property(interior, boundary, tol);

    std::vector<Point2> interior_pts;
    for (const auto& s : interior) interior_pts.push_back(s.image);
    const double gap = quasiconvex_sup_check(interior_pts, boundary, family, ctx.seed);

    const double argmax_tag = hr.violations.empty() ? -1.0 : hr.violations.front().sample.tag;
    const bool pass = !hr.satisfied && std::abs(hr.max_violation - 1.0) <= 1e-9 &&
                      std::abs(argmax_tag - kPi / 2.0) <= 1e-12 && std::abs(gap - 1.0) <= 1e-6;
    StatementResult s = StatementResult::proved("remark-1.1", pass);
    s.metrics["max_violation"] = hr.max_violation;
    s.metrics["argmax_theta"] = argmax_tag;
    s.metrics["quasiconvex_gap"] = gap;
    s.metrics["violation_count"] = static_cast<double>(hr.violations.size());
    s.notes = "arc image escapes the hull of its endpoint images";
    const std::string art = "hull_arc_violations.csv";
    {
      std::ofstream out(ctx.out_dir / art);
      out << "theta,image_x,image_y,distance,witness_x,witness_y\n";
      out.precision(17);
      for (const auto& v : hr.violations)
        out << v.sample.tag << ',' << v.sample.image.x << ',' << v.sample.image.y << ','
            << v.distance << ',' << v.witness.x << ',' << v.witness.y << '\n';
    }
    s.artifacts.push_back(art);
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // hull containment for an affine map and quasi-convex consistency
    Stopwatch sw;
    const Grid2D g = Grid2D::rectangular(0.0, 1.0, 0.0, 1.0, 21, 21);
    std::vector<TaggedPoint2> interior;
    std::vector<Point2> boundary;
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j) {
        const Point2 p = g.position(i, j);
        const Point2 img{p.x + p.y, p.x - p.y};
        if (g.is_boundary(i, j)) boundary.push_back(img);
        else interior.push_back({img, 0.0, g.index(i, j)});
      }
    const HullReport hr = check_hull_property(interior, boundary, 1e-12);
    std::vector<Point2> ipts;
    for (const auto& s : interior) ipts.push_back(s.image);
    const double gap = quasiconvex_sup_check(ipts, boundary, family, ctx.seed);
    StatementResult s =
        StatementResult::proved("prop-1.1", hr.satisfied && gap <= 1e-9);
    s.metrics["affine_max_violation"] = hr.max_violation;
    s.metrics["affine_gap"] = gap;
    s.notes = "affine image stays in the hull; zero quasi-convex gap";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // supported points of a scaled arc image and of a sampled disk
    Stopwatch sw;
    const auto arc = arc_interior_samples(n_samples, 2.0);
    const auto supported = support_probe(arc);
    bool arc_ok = supported.size() == arc.size();
    double worst_radius = 0.0;
    for (const auto& sp : supported) worst_radius = std::max(worst_radius, std::abs(norm(sp.sample.image) - 2.0));
    arc_ok = arc_ok && worst_radius <= 1e-9;

    std::vector<TaggedPoint2> disk;
    const int nd = 21;
    int idx = 0;
    for (int i = 0; i < nd; ++i)
      for (int j = 0; j < nd; ++j) {
        const double x = -1.0 + 2.0 * i / (nd - 1), y = -1.0 + 2.0 * j / (nd - 1);
        if (x * x + y * y < 1.0) disk.push_back({{x, y}, 0.0, idx++});
      }
    const auto disk_supported = support_probe(disk);
    double min_sup_radius = 2.0;
    for (const auto& sp : disk_supported) min_sup_radius = std::min(min_sup_radius, norm(sp.sample.image));
    const bool disk_ok = !disk_supported.empty() && disk_supported.size() < disk.size() &&
                         min_sup_radius > 0.8;
    StatementResult s = StatementResult::proved("thm-1.1", arc_ok && disk_ok);
    s.metrics["arc_supported"] = static_cast<double>(supported.size());
    s.metrics["arc_samples"] = static_cast<double>(arc.size());
    s.metrics["disk_supported"] = static_cast<double>(disk_supported.size());
    s.metrics["disk_samples"] = static_cast<double>(disk.size());
    s.notes = "every scaled-arc image is supported; only near-boundary disk samples are";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// monge
// ---------------------------------------------------------------------------

namespace {

struct MACase {
  std::string name;
  std::function<double(double, double)> exact;  // also the boundary data
  std::function<double(double, double)> h;
};

double observed_order(double coarse_err, double fine_err) {
  if (coarse_err <= 0.0 || fine_err <= 0.0) return 0.0;
  return std::log2(coarse_err / fine_err);
}

}  // namespace

ExperimentReport run_monge(const ExperimentContext& ctx) {
  ExperimentReport rep = make_report(ctx, "monge");
  const int quad_n = ctx.cfg.get_int("monge", "quad_n");
  const int disk_n = ctx.cfg.get_int("monge", "disk_n");
  const double tol = ctx.cfg.get_double("monge", "tol");
  const double hull_factor = ctx.cfg.get_double("monge", "hull_tol_factor");
  const auto exp_ladder = ctx.cfg.get_list("monge", "exp_n");

  {  // determinant expansion identity
    Stopwatch sw;
    const Grid2D g = Grid2D::rectangular(-1.0, 1.0, -1.0, 1.0, 17, 17);
    const std::vector<double> lambdas{0.0, 0.5, 1.0, 2.0, 10.0};
    struct Quad {
      C1Fn u, v, alpha, beta;
    };
    auto fn = [](std::function<double(double, double)> f, std::function<double(double, double)> fx,
                 std::function<double(double, double)> fy) { return C1Fn{f, fx, fy}; };
    const C1Fn X = fn([](double x, double) { return x; }, [](double, double) { return 1.0; },
                      [](double, double) { return 0.0; });
    const C1Fn Y = fn([](double, double y) { return y; }, [](double, double) { return 0.0; },
                      [](double, double) { return 1.0; });
    const C1Fn negY = fn([](double, double y) { return -y; }, [](double, double) { return 0.0; },
                         [](double, double) { return -1.0; });
    const C1Fn XY = fn([](double x, double y) { return x * y; }, [](double, double y) { return y; },
                       [](double x, double) { return x; });
    const C1Fn X2 = fn([](double x, double) { return 0.5 * x * x; },
                       [](double x, double) { return x; }, [](double, double) { return 0.0; });
    const C1Fn Y2 = fn([](double, double y) { return 0.5 * y * y; },
                       [](double, double) { return 0.0; }, [](double, double y) { return y; });
    const C1Fn SINX = fn([](double x, double y) { return std::sin(x) + y; },
                         [](double x, double) { return std::cos(x); },
                         [](double, double) { return 1.0; });
    const C1Fn CUBE = fn([](double x, double y) { return x * x * x / 3.0 + y; },
                         [](double x, double) { return x * x; },
                         [](double, double) { return 1.0; });
    const std::vector<Quad> quads = {
        {X, Y, negY, X},       // the gradient-pair reduction with alpha=-y, beta=x
        {X2, Y2, negY, X},     // gradient of a quadratic
        {XY, Y, X2, Y2},
        {SINX, XY, X, Y},
        {CUBE, X2, XY, Y},
    };
    double worst = 0.0;
    for (const auto& q : quads) {
      const auto r = jacobian_expansion_check(q.u, q.v, q.alpha, q.beta, g, lambdas);
      worst = std::max(worst, r.max_discrepancy);
    }
    // The gradient-pair reduction has B = 0 and C = 1 identically.
    const auto reduction = jacobian_expansion_check(X, Y, negY, X, g, lambdas);
    StatementResult s = StatementResult::proved("thm-1.4", worst <= 1e-12);
    s.metrics["max_discrepancy"] = worst;
    s.metrics["reduction_min_nondegeneracy"] = reduction.min_nondegeneracy;
    s.metrics["reduction_sign_ok"] = reduction.hypothesis_sign_ok ? 1.0 : 0.0;
    s.notes = "quadratic-in-lambda expansion of det(J_{g+lambda f}) matches assembly";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // gradient hull property across the solve corpus
    Stopwatch sw;
    bool all_ok = true;
    StatementResult s = StatementResult::proved("thm-1.5", true);

    const std::vector<MACase> quadratics = {
        {"isotropic", [](double x, double y) { return 0.5 * (x * x + y * y); },
         [](double, double) { return 1.0; }},
        {"anisotropic", [](double x, double y) { return 0.5 * (x * x + 4.0 * y * y); },
         [](double, double) { return 4.0; }},
        {"mixed", [](double x, double y) { return x * x + x * y + y * y; },
         [](double, double) { return 3.0; }},
    };
    for (const auto& c : quadratics) {
      const Grid2D g = Grid2D::rectangular(0.0, 1.0, 0.0, 1.0, quad_n, quad_n);
      const MADomain dom = MADomain::square(g);
      const MASolution sol = solve_ma(dom, ScalarField::sample(g, c.h), c.exact, tol);
      double err = 0.0;
      const ScalarField exact = ScalarField::sample(g, c.exact);
      for (int k = 0; k < g.node_count(); ++k)
        err = std::max(err, std::abs(sol.u.values()[k] - exact.values()[k]));
      const HullReport hr = verify_gradient_hull(sol, hull_factor * g.hx());
      s.metrics["err_" + c.name] = err;
      s.metrics["viol_" + c.name] = hr.max_violation;
      all_ok = all_ok && sol.accepted && hr.satisfied && err <= 1e-7;
    }

    {  // manufactured solution with analytic data; second-order convergence
      std::vector<double> errs;
      for (double dn : exp_ladder) {
        const int n = static_cast<int>(dn);
        const Grid2D g = Grid2D::rectangular(-0.5, 0.5, -0.5, 0.5, n, n);
        auto exact = [](double x, double y) { return std::exp(0.5 * (x * x + y * y)); };
        auto h = [](double x, double y) {
          const double r2 = x * x + y * y;
          return (1.0 + r2) * std::exp(r2);
        };
        const MADomain dom = MADomain::square(g);
        const MASolution sol = solve_ma(dom, ScalarField::sample(g, h), exact, tol);
        const ScalarField ex = ScalarField::sample(g, exact);
        double err = 0.0;
        for (int k = 0; k < g.node_count(); ++k)
          err = std::max(err, std::abs(sol.u.values()[k] - ex.values()[k]));
        errs.push_back(err);
        s.metrics["exp_err_n" + std::to_string(n)] = err;
        if (dn == exp_ladder.back()) {
          const HullReport hr = verify_gradient_hull(sol, hull_factor * g.hx());
          s.metrics["viol_exponential"] = hr.max_violation;
          all_ok = all_ok && sol.accepted && hr.satisfied;
        }
      }
      double min_order = 10.0;
      for (size_t k = 0; k + 1 < errs.size(); ++k)
        min_order = std::min(min_order, observed_order(errs[k], errs[k + 1]));
      s.metrics["exp_observed_order"] = min_order;
      all_ok = all_ok && min_order >= 1.5 && min_order <= 2.6;
    }

    {  // disk domain, h = 1, vanishing boundary data on the unit circle
      const MADomain dom = MADomain::disk(0.0, 0.0, 1.0, disk_n);
      auto bdata = [](double x, double y) { return 0.5 * (x * x + y * y - 1.0); };
      const MASolution sol =
          solve_ma(dom, ScalarField(dom.grid, 1.0), bdata, tol);
      const HullReport hr = verify_gradient_hull(sol, hull_factor * dom.grid.hx());
      s.metrics["viol_disk"] = hr.max_violation;
      s.metrics["disk_residual"] = sol.residual_norm;
      s.metrics["disk_convexity_margin"] = sol.convexity_margin;
      all_ok = all_ok && sol.accepted && hr.satisfied;
      const std::string art = "ma_disk_solution.csv";
      dump_ma_csv(sol, ctx.out_dir / art);
      s.artifacts.push_back(art);
    }

    {  // corrupted field must violate the hull containment (negative control);
       // the bump vanishes to second order on the boundary, so the boundary
       // gradient image stays put while interior gradients escape
      const Grid2D g = Grid2D::rectangular(0.0, 1.0, 0.0, 1.0, quad_n, quad_n);
      const MADomain dom = MADomain::square(g);
      const ScalarField bad = ScalarField::sample(g, [](double x, double y) {
        const double sx = std::sin(kPi * x), sy = std::sin(kPi * y);
        return 0.5 * (x * x + y * y) + 0.5 * sx * sx * sy * sy;
      });
      const HullReport hr = gradient_hull_report(bad, dom, hull_factor * g.hx());
      s.metrics["control_violation"] = hr.max_violation;
      all_ok = all_ok && !hr.satisfied;
    }

    s.verdict = all_ok ? "pass" : "fail";
    s.notes = "gradients of accepted solutions stay in the hull of boundary gradients";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// radial
// ---------------------------------------------------------------------------

ExperimentReport run_radial(const ExperimentContext& ctx) {
  ExperimentReport rep = make_report(ctx, "radial");
  const int drift_steps = ctx.cfg.get_int("radial", "drift_steps");
  const auto order_steps = ctx.cfg.get_list("radial", "order_steps");
  const int scan_samples = ctx.cfg.get_int("radial", "scan_samples");
  const int scan_steps = ctx.cfg.get_int("radial", "scan_steps");
  const double scan_range = ctx.cfg.get_double("radial", "scan_range");
  const auto lambdas = ctx.cfg.get_list("radial", "lambdas");
  const auto poh_ladder = ctx.cfg.get_list("radial", "pohozaev_n");

  const Nonlinearity msin = Nonlinearity::minus_sine();

  {  // conserved quantity along trajectories
    Stopwatch sw;
    const RadialProfile p = radial_shoot(2, 1.0, 2.0, 50.0, msin, 5.0, drift_steps);
    std::vector<double> drifts;
    for (double dn : order_steps)
      drifts.push_back(radial_shoot(2, 1.0, 2.0, 50.0, msin, 5.0, static_cast<int>(dn)).energy_drift);
    double min_order = 10.0;
    for (size_t k = 0; k + 1 < drifts.size(); ++k)
      min_order = std::min(min_order, observed_order(drifts[k], drifts[k + 1]));
    StatementResult s =
        StatementResult::proved("thm-2.1-energy", p.energy_drift <= 1e-8 && min_order >= 3.5);
    s.metrics["drift"] = p.energy_drift;
    s.metrics["observed_order"] = min_order;
    s.metrics["r1"] = p.r1;
    const std::string art = "radial_profile.csv";
    p.dump_csv(ctx.out_dir / art);
    s.artifacts.push_back(art);
    s.notes = "I(r) = u'^2/2 + (n-1) int u'^2/t dt + lambda F(u) is flat along trajectories";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // slope scans: no nonzero radial solution for the sup F <= 0 class
    Stopwatch sw;
    bool only_zero = true;
    StatementResult s = StatementResult::proved("thm-2.1", true);
    std::ostringstream rootlog;
    for (double lam : lambdas) {
      const auto roots = shooting_scan(2, 1.0, 2.0, lam, msin, -scan_range, scan_range,
                                       scan_samples, scan_steps);
      only_zero = only_zero && roots.size() == 1 && roots[0] == 0.0;
      s.metrics["roots_lambda_" + std::to_string(static_cast<int>(lam))] =
          static_cast<double>(roots.size());
      rootlog << " lambda=" << lam << " roots={";
      for (size_t k = 0; k < roots.size(); ++k) rootlog << (k ? "," : "") << roots[k];
      rootlog << "}";
    }
    s.verdict = only_zero ? "pass" : "fail";
    s.notes = "slope scans find only the trivial radial solution;" + rootlog.str();
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // supercritical control keeps the scan honest
    Stopwatch sw;
    const auto roots = shooting_scan(3, 1.0, 2.0, 1.0, Nonlinearity::quintic(), -scan_range,
                                     scan_range, scan_samples, scan_steps);
    double best_res = std::numeric_limits<double>::infinity();
    int found = 0;
    for (double r : roots) {
      if (r == 0.0) continue;
      const RadialProfile prof = radial_shoot(3, 1.0, 2.0, 1.0, Nonlinearity::quintic(), r, scan_steps);
      if (!prof.blown_up) best_res = std::min(best_res, std::abs(prof.u.back()));
      ++found;
    }
    StatementResult s =
        StatementResult::proved("remark-2.1", found >= 1 && best_res <= 1e-8);
    s.metrics["nonzero_roots"] = found;
    s.metrics["best_bvp_residual"] = best_res;
    int idx = 0;
    for (double r : roots)
      if (r != 0.0) s.metrics["root_" + std::to_string(idx++)] = r;
    s.notes = "supercritical radial solutions exist on the annulus and the scan finds them";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // boundary identity residual for the disk eigenfunction
    Stopwatch sw;
    const double j0 = bessel_j0_first_zero();
    const double lam = j0 * j0;
    const Nonlinearity lin = Nonlinearity::linear();
    std::vector<double> residuals;
    StatementResult s = StatementResult::proved("eq-2.1", true);
    for (double dn : poh_ladder) {
      const int n = static_cast<int>(dn);
      const Grid2D g = Grid2D::polar_annulus(1.0 / n, 1.0, n, n);
      const ScalarField u = ScalarField::sample_polar(
          g, [&](double r, double) { return std::cyl_bessel_j(0.0, j0 * r); });
      const PohozaevResult pr = pohozaev_residual(u, lam, lin, 2, 1e-6);
      residuals.push_back(pr.relative_residual);
      s.metrics["residual_n" + std::to_string(n)] = pr.relative_residual;
      if (dn == poh_ladder.back()) {
        s.metrics["lhs"] = pr.lhs;
        s.metrics["rhs"] = pr.rhs;
      }
    }
    double min_order = 10.0;
    for (size_t k = 0; k + 1 < residuals.size(); ++k)
      min_order = std::min(min_order, observed_order(residuals[k], residuals[k + 1]));
    s.metrics["observed_order"] = min_order;
    const bool pass = residuals.back() <= 2e-2 && min_order >= 1.0;
    s.verdict = pass ? "pass" : "fail";
    s.notes = "both sides reduce to pi j0^2 J1(j0)^2 for the disk eigenfunction";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// annulus
// ---------------------------------------------------------------------------

namespace {

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep) {
  std::ofstream out(path);
  out << "lambda,seed,converged,residual_norm,solution_norm,radiality,pohozaev_rel\n";
  out.precision(17);
  for (const auto& o : sweep.outcomes)
    out << o.lambda << ',' << o.seed_desc << ',' << (o.converged ? 1 : 0) << ','
        << o.residual_norm << ',' << o.solution_norm << ',' << o.radiality << ','
        << o.pohozaev_rel << '\n';
}

}  // namespace

ExperimentReport run_annulus(const ExperimentContext& ctx) {
  ExperimentReport rep = make_report(ctx, "annulus");
  const double a = ctx.cfg.get_double("annulus", "a");
  const double b = ctx.cfg.get_double("annulus", "b");
  const int n1 = ctx.cfg.get_int("annulus", "lambda1_n");
  const int nr = ctx.cfg.get_int("annulus", "sweep_nr");
  const int ntheta = ctx.cfg.get_int("annulus", "sweep_ntheta");
  const int sweep_steps = ctx.cfg.get_int("annulus", "sweep_steps");
  const double lo_factor = ctx.cfg.get_double("annulus", "lambda_lo_factor");
  const double hi_factor = ctx.cfg.get_double("annulus", "lambda_hi_factor");
  const double tol = ctx.cfg.get_double("annulus", "newton_tol");
  const int max_iter = ctx.cfg.get_int("annulus", "newton_max_iter");

  double lam1_oracle = 0.0;
  {  // first eigenvalue against the 1-D shooting oracle
    Stopwatch sw;
    const Grid2D g = Grid2D::polar_annulus(a, b, n1, n1);
    const Lambda1Result l1 = lambda1(g);
    lam1_oracle = lambda1_radial_oracle(a, b);
    const double rel = std::abs(l1.lambda1 - lam1_oracle) / lam1_oracle;
    const double rad = radiality_measure(l1.eigenfunction);
    StatementResult s =
        StatementResult::proved("lambda1-threshold", rel <= 1e-3 && rad <= 1e-6);
    s.metrics["lambda1_fd"] = l1.lambda1;
    s.metrics["lambda1_oracle"] = lam1_oracle;
    s.metrics["relative_error"] = rel;
    s.metrics["three_lambda1"] = 3.0 * lam1_oracle;
    s.metrics["eigenfunction_radiality"] = rad;
    s.metrics["iterations"] = l1.iterations;
    s.notes = "any nonzero solution of the sine problem needs lambda > 3 lambda1";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // search protocol for the open problem: outcomes, never claims
    Stopwatch sw;
    const Grid2D g = Grid2D::polar_annulus(a, b, nr, ntheta);
    std::vector<int> modes;
    for (double v : ctx.cfg.get_list("annulus", "seed_angular_modes"))
      modes.push_back(static_cast<int>(v));
    const auto corpus =
        seed_corpus(ctx.seed, ctx.cfg.get_list("annulus", "seed_bump_amplitudes"), modes,
                    ctx.cfg.get_double("annulus", "seed_angular_amplitude"),
                    ctx.cfg.get_list("annulus", "seed_random_amplitudes"));
    const SweepResult sweep =
        continuation_sweep(g, lo_factor * lam1_oracle, hi_factor * lam1_oracle, sweep_steps,
                           corpus, Nonlinearity::minus_sine(), tol, max_iter, ctx.threads);
    StatementResult s = StatementResult::conjecture("conj-2.1");
    s.metrics["seeds"] = static_cast<double>(corpus.size());
    s.metrics["outcomes"] = static_cast<double>(sweep.outcomes.size());
    int converged = 0, nonzero = 0;
    for (const auto& o : sweep.outcomes) {
      converged += o.converged ? 1 : 0;
      nonzero += o.nonzero() ? 1 : 0;
    }
    s.metrics["converged"] = converged;
    s.metrics["nonzero_finds"] = nonzero;
    s.notes = "verdict: " + sweep.verdict;
    const std::string art = "annulus_sweep.csv";
    write_sweep_csv(ctx.out_dir / art, sweep);
    s.artifacts.push_back(art);
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));

    // Any converged nonzero find that is radial contradicts the proved
    // radial nonexistence and marks a harness bug.
    Stopwatch sw2;
    bool guard_ok = true;
    for (const auto& o : sweep.outcomes)
      if (o.nonzero() && o.radiality <= 1e-3) guard_ok = false;
    StatementResult guard = StatementResult::proved("thm-2.1-radial-guard", guard_ok);
    guard.metrics["nonzero_finds"] = nonzero;
    guard.notes = "no converged nonzero radial solution may appear in the sweep";
    guard.wall_time_s = sw2.seconds();
    rep.statements.push_back(std::move(guard));
  }

  if (ctx.cfg.get_bool("annulus", "run_control")) {
    // Positive control: a nonlinearity with sup F > 0 where nonzero
    // solutions exist and the same harness finds one.
    Stopwatch sw;
    const Grid2D g = Grid2D::polar_annulus(a, b, nr, ntheta);
    const double lam = ctx.cfg.get_double("annulus", "control_lambda");
    SeedSpec bump{SeedSpec::Kind::RadialBump, 1.5, 0, 0, {}};
    const SearchOutcome o =
        newton_search(g, lam, bump, Nonlinearity::cubic_minus_linear(), tol, max_iter);
    StatementResult s = StatementResult::proved(
        "harness-control", o.converged && o.solution_norm > 1e-6 && o.residual_norm <= 1e-8);
    s.metrics["residual_norm"] = o.residual_norm;
    s.metrics["solution_norm"] = o.solution_norm;
    s.metrics["radiality"] = o.radiality;
    s.metrics["pohozaev_rel"] = o.pohozaev_rel;
    s.notes = "the search harness can locate nonzero solutions when they exist";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

namespace {

std::vector<AdmissibleScalar> bump_members() {
  std::vector<AdmissibleScalar> out;
  auto quad = [](double L, const std::string& label) {
    AdmissibleScalar m;
    m.I = [L](double x) { return -0.5 * L * x * x; };
    m.dI = [L](double x) { return -L * x; };
    m.lipschitz = L;
    m.label = label;
    return m;
  };
  out.push_back(quad(0.5, "quadratic(L=0.5)"));
  out.push_back(quad(0.99, "quadratic(L=0.99)"));
  auto cosb = [](double L, const std::string& label) {
    AdmissibleScalar m;
    m.I = [L](double x) { return L * (std::cos(x) - 1.0); };
    m.dI = [L](double x) { return -L * std::sin(x); };
    m.lipschitz = L;
    m.label = label;
    return m;
  };
  out.push_back(cosb(0.9, "cosine-bump(L=0.9)"));
  out.push_back(cosb(0.5, "cosine-bump(L=0.5)"));
  {
    AdmissibleScalar m;  // I = -a x^2/(1+x^2), I' Lipschitz constant 2a at 0
    const double aa = 0.45;
    m.I = [aa](double x) { return -aa * x * x / (1.0 + x * x); };
    m.dI = [aa](double x) {
      const double d = 1.0 + x * x;
      return -2.0 * aa * x / (d * d);
    };
    m.lipschitz = 0.9;
    m.label = "rational-bump(a=0.45)";
    out.push_back(m);
  }
  return out;
}

}  // namespace

ExperimentReport run_gamma(const ExperimentContext& ctx) {
  ExperimentReport rep = make_report(ctx, "gamma");
  const auto x0s = ctx.cfg.get_list("gamma", "x0_list");
  const auto mus = ctx.cfg.get_list("gamma", "mu_list");
  const auto lambda_list = ctx.cfg.get_list("gamma", "lambda_list");
  const int samples = ctx.cfg.get_int("gamma", "scan_samples");
  const double xr = ctx.cfg.get_double("gamma", "x_range");

  {  // branch gluing, Lipschitz constant, vanishing endpoint integral
    Stopwatch sw;
    double worst_cont = 0.0, worst_dcont = 0.0, worst_end = 0.0, worst_int = 0.0;
    for (double x0 : x0s) {
      const ExtremalG gfun{x0, 1.0};
      for (int bp = 0; bp < 2; ++bp) {
        // one-sided limits = adjacent branch formulas at the breakpoint
        const double x = bp == 0 ? x0 / 3.0 : x0;
        const auto left = g_eval_branch(gfun, bp, x);
        const auto right = g_eval_branch(gfun, bp + 1, x);
        worst_cont = std::max(worst_cont, std::abs(left.first - right.first));
        worst_dcont = std::max(worst_dcont, std::abs(left.second - right.second));
      }
      worst_end = std::max(worst_end, std::abs(g_eval(gfun, 4.0 * x0 / 3.0).first));
      // integral of g' over [0, 4 x0/3], split at the kinks (Simpson exact per piece)
      auto piece = [&](double a, double b) {
        const double m = 0.5 * (a + b);
        return (b - a) / 6.0 *
               (g_eval(gfun, a).second + 4.0 * g_eval(gfun, m).second + g_eval(gfun, b).second);
      };
      worst_int = std::max(worst_int, std::abs(piece(0.0, x0 / 3.0) + piece(x0 / 3.0, x0) +
                                               piece(x0, 4.0 * x0 / 3.0)));
    }
    // Monte-Carlo Lipschitz estimate of g' (constant is exactly 1).
    std::mt19937_64 rng(ctx.seed);
    std::uniform_real_distribution<double> U(-15.0, 15.0);
    const ExtremalG ref{3.0, 1.0};
    double lip = 0.0;
    for (int k = 0; k < 1000000; ++k) {
      const double x = U(rng), y = U(rng);
      if (x == y) continue;
      lip = std::max(lip, std::abs(g_eval(ref, x).second - g_eval(ref, y).second) / std::abs(x - y));
    }
    const bool pass = worst_cont <= 1e-14 && worst_dcont <= 1e-13 && worst_end <= 1e-13 &&
                      worst_int <= 1e-10 && std::abs(lip - 1.0) <= 1e-6;
    StatementResult s = StatementResult::proved("prop-2.1", pass);
    s.metrics["branch_continuity"] = worst_cont;
    s.metrics["branch_derivative_continuity"] = worst_dcont;
    s.metrics["g_at_4x0_over_3"] = worst_end;
    s.metrics["contradiction_integral"] = worst_int;
    s.metrics["lipschitz_estimate"] = lip;
    s.notes = "scaled three-branch family realizes the threshold 3 from above";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // family verification: lower bound for lambda <= 3, witness at 3 mu
    Stopwatch sw;
    std::vector<AdmissibleScalar> family;
    for (double x0 : x0s)
      for (double mu : mus) family.push_back(AdmissibleScalar::from_extremal({x0, mu}));
    for (auto& m : bump_members()) family.push_back(m);
    // adversarial member sits on the class boundary and must be rejected
    family.push_back(AdmissibleScalar::from_extremal({1.0, 1.0}));

    const GammaReport gr = verify_gamma_three(family, lambda_list, -xr, xr, samples);
    int rejected = 0;
    for (const auto& row : gr.rows)
      if (!row.certified) ++rejected;
    const bool pass = gr.lower_bound_ok && gr.upper_bound_ok && rejected == 1;
    StatementResult s = StatementResult::proved("thm-2.2", pass);
    s.metrics["rows"] = static_cast<double>(gr.rows.size());
    s.metrics["rejected_members"] = rejected;
    s.metrics["lower_bound_ok"] = gr.lower_bound_ok ? 1.0 : 0.0;
    s.metrics["upper_bound_ok"] = gr.upper_bound_ok ? 1.0 : 0.0;
    s.notes = "fixed-point display read as x0 = 3 g'(x0); the derivative reading makes the"
              " witness identity hold and is flagged here";
    const std::string art = "gamma_roots.csv";
    {
      std::ofstream out(ctx.out_dir / art);
      out << "member,lambda,certified,roots\n";
      out.precision(17);
      for (const auto& row : gr.rows) {
        out << row.label << ',' << row.lambda << ',' << (row.certified ? 1 : 0) << ',';
        for (size_t k = 0; k < row.roots.size(); ++k)
          out << (k ? ";" : "") << row.roots[k];
        out << '\n';
      }
    }
    s.artifacts.push_back(art);
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// minimax
// ---------------------------------------------------------------------------

ExperimentReport run_minimax(const ExperimentContext& ctx) {
  ExperimentReport rep = make_report(ctx, "minimax");
  const int corpus_size = ctx.cfg.get_int("minimax", "corpus_size");
  const double grid_step = ctx.cfg.get_double("minimax", "grid_step");
  const int gdim = ctx.cfg.get_int("minimax", "galerkin_dim");
  const int quad_n = ctx.cfg.get_int("minimax", "quad_n");

  const FiniteInstance two = FiniteInstance::from_scalars({0.0, 1.0}, {0.0, 1.0});
  const VGrid grid{{-1.0}, {2.0}, grid_step};

  {  // strict inequality on the two-state instance
    Stopwatch sw;
    const double th = theta(two);
    const GapResult gap3 = minimax_gap(two, 3.0, grid);
    const GapResult gap0 = minimax_gap(two, 0.0, grid);
    const GapResult gap19 = minimax_gap(two, 1.9, grid);  // below theta: recorded only
    const bool pass = th == 2.0 && std::abs(gap3.lhs + 1.0 / 24.0) <= 1e-6 && gap3.rhs == 0.0 &&
                      gap3.strict && std::abs(gap0.lhs - gap0.rhs) <= 1e-12 && !gap0.strict;
    StatementResult s = StatementResult::proved("thm-3.a", pass);
    s.metrics["theta"] = th;
    s.metrics["lhs"] = gap3.lhs;
    s.metrics["rhs"] = gap3.rhs;
    s.metrics["lhs_argmax"] = gap3.lhs_argmax[0];
    s.metrics["below_theta_lhs"] = gap19.lhs;
    s.metrics["below_theta_strict"] = gap19.strict ? 1.0 : 0.0;
    s.notes = "sup-inf stays strictly below inf-sup once lambda exceeds theta";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // two global minima at the reported v*
    Stopwatch sw;
    const VStarResult vs = find_vstar(two, 3.0, grid);
    bool pass = std::abs(vs.vstar[0] - 1.0 / 6.0) <= 1e-4 && vs.tie_gap <= 1e-9 &&
                vs.argmin_states.size() >= 2;
    // symmetric instance: tie forced at the midpoint
    const FiniteInstance sym = FiniteInstance::from_scalars({1.0, 1.0}, {-1.0, 1.0});
    const VStarResult vs_sym = find_vstar(sym, 1.0, grid);
    pass = pass && std::abs(vs_sym.vstar[0]) <= 1e-6;
    StatementResult s = StatementResult::proved("thm-3.b", pass);
    s.metrics["vstar"] = vs.vstar[0];
    s.metrics["tie_gap"] = vs.tie_gap;
    s.metrics["tie_states"] = static_cast<double>(vs.argmin_states.size());
    s.metrics["vstar_symmetric"] = vs_sym.vstar[0];
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // seeded corpus: strict gap at lambda = 2 theta on every instance
    Stopwatch sw;
    int strict_count = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    bool homogeneity_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 0; k < corpus_size; ++k) {
      const std::uint64_t inst_seed = ctx.seed + 7919 * (k + 1);
      const FiniteInstance inst = random_instance(inst_seed);
      const double th = theta(inst);
      FiniteInstance scaled = inst;
      for (double& Jv : scaled.J) Jv *= 2.0;
      if (theta(scaled) != 2.0 * th) homogeneity_ok = false;
      double vlo = 1e300, vhi = -1e300;
      for (const auto& w : inst.v) {
        vlo = std::min(vlo, w[0]);
        vhi = std::max(vhi, w[0]);
      }
      const VGrid vg{{vlo - 1.0}, {vhi + 1.0}, 1e-3};
      const GapResult gap = minimax_gap(inst, 2.0 * th, vg);
      if (gap.strict) ++strict_count;
      min_margin = std::min(min_margin, gap.rhs - gap.lhs);
      std::vector<double> vs;
      for (const auto& w : inst.v) vs.push_back(w[0]);
      rows.push_back({{"seed", inst_seed},
                      {"J", inst.J},
                      {"v", vs},
                      {"theta", th},
                      {"lambda", 2.0 * th},
                      {"lhs", gap.lhs},
                      {"rhs", gap.rhs},
                      {"strict", gap.strict}});
    }
    StatementResult s = StatementResult::proved(
        "thm-3.a-corpus", strict_count == corpus_size && homogeneity_ok);
    s.metrics["instances"] = corpus_size;
    s.metrics["strict_count"] = strict_count;
    s.metrics["min_margin"] = min_margin;
    s.metrics["theta_homogeneity_exact"] = homogeneity_ok ? 1.0 : 0.0;
    const std::string art = "minimax_corpus.json";
    write_json_atomic(rows, ctx.out_dir / art);
    s.artifacts.push_back(art);
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // Galerkin energy: analytic gradient against central differences
    Stopwatch sw;
    KirchhoffEnergy ke(1.0, 1.0, 1.0, 2.0, 0.5, gdim, quad_n);
    Eigen::VectorXd vc = Eigen::VectorXd::Zero(gdim);
    vc[0] = 0.7;
    if (gdim > 1) vc[1] = -0.3;
    ke.set_vstar_coeffs(vc);
    std::mt19937_64 rng(ctx.seed + 11);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double worst_rel = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::VectorXd c(gdim);
      for (int k = 0; k < gdim; ++k) c[k] = U(rng);
      const auto ev = ke.evaluate(c);
      for (int k = 0; k < gdim; ++k) {
        const double h = 1e-5 * (1.0 + std::abs(c[k]));
        Eigen::VectorXd cp = c, cm = c;
        cp[k] += h;
        cm[k] -= h;
        const double fd = (ke.evaluate(cp).value - ke.evaluate(cm).value) / (2.0 * h);
        const double rel = std::abs(fd - ev.gradient[k]) / (1.0 + std::abs(ev.gradient[k]));
        worst_rel = std::max(worst_rel, rel);
      }
    }
    const double gram = ke.gram_orthonormality_error();
    StatementResult s =
        StatementResult::proved("cor-3.1", worst_rel <= 1e-6 && gram <= 1e-10);
    s.metrics["gradient_fd_rel_error"] = worst_rel;
    s.metrics["gram_error"] = gram;
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // coercivity dichotomy on rays
    Stopwatch sw;
    Eigen::VectorXd dir = Eigen::VectorXd::Zero(gdim);
    dir[0] = 1.0;
    KirchhoffEnergy grow(1.0, 1.0, 1.0, 2.0, 0.0, gdim, quad_n);
    KirchhoffEnergy sink(1.0, 1.0, 1.0, 4.0, 0.0, gdim, quad_n);
    const double at100 = grow.evaluate(100.0 * dir).value;
    double t_plus = 0.0, t_minus = 0.0;
    double v_plus = 0.0, v_minus = 0.0;
    for (double t = 1.0; t <= 1e7; t *= 2.0) {
      if (t_plus == 0.0 && grow.evaluate(t * dir).value > 1e6) {
        t_plus = t;
        v_plus = grow.evaluate(t * dir).value;
      }
      if (t_minus == 0.0 && sink.evaluate(t * dir).value < -1e6) {
        t_minus = t;
        v_minus = sink.evaluate(t * dir).value;
      }
      if (t_plus > 0.0 && t_minus > 0.0) break;
    }
    const bool pass = at100 > 2.4e7 && t_plus > 0.0 && t_minus > 0.0;
    StatementResult s = StatementResult::proved("remark-3.2", pass);
    s.metrics["p2_value_t100"] = at100;
    s.metrics["p2_escape_t"] = t_plus;
    s.metrics["p2_escape_value"] = v_plus;
    s.metrics["p4_escape_t"] = t_minus;
    s.metrics["p4_escape_value"] = v_minus;
    s.notes = "subquartic growth is coercive on rays; the p = 4 term is unbounded below";
    const std::string art = "kirchhoff_rays.csv";
    {
      std::ofstream out(ctx.out_dir / art);
      out << "t,value_p2,value_p4\n";
      out.precision(17);
      for (double t = 0.0; t <= 64.0; t += 4.0)
        out << t << ',' << grow.evaluate(t * dir).value << ',' << sink.evaluate(t * dir).value
            << '\n';
    }
    s.artifacts.push_back(art);
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// connectivity
// ---------------------------------------------------------------------------

namespace {

struct ConnInstance {
  std::string name;
  std::function<Eigen::VectorXd(double)> A;
  double eps;
  int expected_gamma;
  int expected_domain;
};

}  // namespace

ExperimentReport run_connectivity(const ExperimentContext& ctx) {
  ExperimentReport rep = make_report(ctx, "connectivity");
  const double h = ctx.cfg.get_double("connectivity", "spacing");
  const double yhw = ctx.cfg.get_double("connectivity", "y_halfwidth");
  const double eps_hyp = ctx.cfg.get_double("connectivity", "eps_hyperbola");
  const double eps_def = ctx.cfg.get_double("connectivity", "eps_default");

  auto scalar = [](const std::function<double(double)>& f) {
    return [f](double x) {
      Eigen::VectorXd v(1);
      v[0] = f(x);
      return v;
    };
  };

  {  // disconnected level set <=> disconnected zero-free domain
    Stopwatch sw;
    const std::vector<ConnInstance> corpus = {
        {"identity", scalar([](double x) { return x; }), eps_hyp, 2, 2},
        {"constant", scalar([](double) { return 1.0; }), eps_def, 1, 1},
        {"no-zeros", scalar([](double x) { return x * x + 0.1; }), eps_def, 1, 1},
    };
    bool all_ok = true;
    StatementResult s = StatementResult::proved("thm-4.2", true);
    bool wrote_artifact = false;
    for (const auto& inst : corpus) {
      OperatorSpec spec;
      spec.x_lo = -1.0;
      spec.x_hi = 1.0;
      spec.m = 1;
      spec.A = inst.A;

      auto res_for = [&](double half, double hh) {
        const int rx = static_cast<int>(std::lround((spec.x_hi - spec.x_lo) / hh)) + 1;
        const int ry = static_cast<int>(std::lround(2.0 * half / hh)) + 1;
        return theorem_4_2_check(spec, -half, half, rx, ry, inst.eps);
      };

      const Thm42Result base = res_for(yhw, h);
      const Thm42Result grow2 = res_for(2.0 * yhw, h);   // box growth at fixed spacing
      const Thm42Result grow4 = res_for(4.0 * yhw, h);
      const Thm42Result fine = res_for(yhw, 0.5 * h);    // refinement at fixed box

      const bool counts_ok = base.gamma_components == inst.expected_gamma &&
                             base.domain_components == inst.expected_domain && base.equivalent;
      const bool stable = grow2.gamma_components == base.gamma_components &&
                          grow4.gamma_components == base.gamma_components &&
                          fine.gamma_components == base.gamma_components &&
                          grow2.domain_components == base.domain_components &&
                          grow4.domain_components == base.domain_components &&
                          fine.domain_components == base.domain_components;
      all_ok = all_ok && counts_ok && stable;
      s.metrics[inst.name + "_gamma"] = base.gamma_components;
      s.metrics[inst.name + "_domain"] = base.domain_components;
      s.metrics[inst.name + "_stable"] = stable ? 1.0 : 0.0;

      if (!wrote_artifact) {  // labeled hyperbola sample for plots
        const std::string art = "connectivity_components.csv";
        std::ofstream out(ctx.out_dir / art);
        out << "x,y,label\n";
        out.precision(17);
        for (int p = 0; p < base.gamma_sample.size(); ++p)
          out << base.gamma_sample.coords[2 * p] << ',' << base.gamma_sample.coords[2 * p + 1]
              << ',' << base.gamma_labels.labels[p] << '\n';
        s.artifacts.push_back(art);
        wrote_artifact = true;
      }
    }
    s.verdict = all_ok ? "pass" : "fail";
    s.notes = "disconnection verdicts are stable under box growth and refinement";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }

  {  // general level function: line union zero fiber stays connected
    Stopwatch sw;
    OperatorSpec spec;
    spec.x_lo = -1.0;
    spec.x_hi = 1.0;
    spec.m = 1;
    spec.A = scalar([](double x) { return x; });
    spec.alpha = [](double x) { return x * x; };
    const int rx = static_cast<int>(std::lround(2.0 / h)) + 1;
    const int ry = static_cast<int>(std::lround(4.0 / h)) + 1;
    const SampledSet cross = level_set_sample(spec, {{-2.0, 2.0}}, {rx, ry}, eps_def);
    const ComponentLabeling lab = connected_components(cross);
    StatementResult s = StatementResult::proved("prop-4.1", lab.count == 1);
    s.metrics["components"] = lab.count;
    s.metrics["sample_size"] = cross.size();
    s.notes = "level set for alpha(x) = x^2 samples as a connected cross";
    s.wall_time_s = sw.seconds();
    rep.statements.push_back(std::move(s));
  }
  return rep;
}

ExperimentReport run_all(const ExperimentContext& ctx) {
  ExperimentReport rep = make_report(ctx, "all");
  for (const auto* name : {"hull-check", "monge", "radial", "annulus", "gamma", "minimax",
                           "connectivity"}) {
    ExperimentReport sub = run_subcommand(name, ctx);
    for (auto& s : sub.statements) rep.statements.push_back(std::move(s));
  }
  return rep;
}

ExperimentReport run_subcommand(const std::string& name, const ExperimentContext& ctx) {
  if (name == "hull-check") return run_hull_check(ctx);
  if (name == "monge") return run_monge(ctx);
  if (name == "radial") return run_radial(ctx);
  if (name == "annulus") return run_annulus(ctx);
  if (name == "gamma") return run_gamma(ctx);
  if (name == "minimax") return run_minimax(ctx);
  if (name == "connectivity") return run_connectivity(ctx);
  if (name == "all") return run_all(ctx);
  throw std::invalid_argument("unknown subcommand: " + name);
}

}  // namespace nonlinlab
