#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonlinlab/annulus.hpp"
#include "nonlinlab/connectivity.hpp"
#include "nonlinlab/experiments.hpp"
#include "nonlinlab/gamma_three.hpp"
#include "nonlinlab/grid.hpp"
#include "nonlinlab/hull.hpp"
#include "nonlinlab/hull_property.hpp"
#include "nonlinlab/kirchhoff.hpp"
#include "nonlinlab/minimax.hpp"
#include "nonlinlab/monge_ampere.hpp"
#include "nonlinlab/radial.hpp"

namespace py = pybind11;
using namespace nonlinlab;

namespace {

std::vector<Point2> to_points(const std::vector<std::pair<double, double>>& pts) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (auto [x, y] : pts) out.push_back({x, y});
  return out;
}

std::vector<TaggedPoint2> to_tagged(const std::vector<std::pair<double, double>>& pts) {
  std::vector<TaggedPoint2> out;
  out.reserve(pts.size());
  int idx = 0;
  for (auto [x, y] : pts) {
    out.push_back({{x, y}, 0.0, idx});
    ++idx;
  }
  return out;
}

Eigen::VectorXd to_vec(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<long>(v.size()));
}

std::vector<double> from_vec(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

PYBIND11_MODULE(_nonlinlab, m) {
  m.doc() = "numerical lab for hull containment, radial shooting, eigenvalue "
            "search, fixed-point thresholds, minimax gaps, and level-set "
            "connectivity";

  // ---- grids and fields ----
  py::class_<Grid2D>(m, "Grid2D")
      .def_static("rectangular", &Grid2D::rectangular, py::arg("x0"), py::arg("x1"), py::arg("y0"),
                  py::arg("y1"), py::arg("nx"), py::arg("ny"))
      .def_static("polar_annulus", &Grid2D::polar_annulus, py::arg("a"), py::arg("b"),
                  py::arg("nr"), py::arg("ntheta"))
      .def_property_readonly("nx", [](const Grid2D& g) { return g.nx; })
      .def_property_readonly("ny", [](const Grid2D& g) { return g.ny; })
      .def("hx", &Grid2D::hx)
      .def("hy", &Grid2D::hy)
      .def("node_count", &Grid2D::node_count);

  py::class_<ScalarField>(m, "ScalarField")
      .def(py::init([](const Grid2D& g, double fill) { return ScalarField(g, fill); }),
           py::arg("grid"), py::arg("fill") = 0.0)
      .def_static("sample", &ScalarField::sample)
      .def_static("sample_polar", &ScalarField::sample_polar)
      .def("values", [](const ScalarField& f) { return f.values(); })
      .def("grid", &ScalarField::grid)
      .def("max_abs", &ScalarField::max_abs);

  m.def("integrate",
        [](const ScalarField& u) { return integrate(u); });
  m.def("l2_norm", &l2_norm);
  m.def("fd_gradient", [](const ScalarField& u) {
    const VectorField2 g = fd_gradient(u);
    return std::make_pair(g.x, g.y);
  });

  // ---- hull geometry ----
  py::class_<ConvexPolygon>(m, "ConvexPolygon")
      .def("vertices",
           [](const ConvexPolygon& h) {
             std::vector<std::pair<double, double>> out;
             for (const Point2& v : h.vertices) out.emplace_back(v.x, v.y);
             return out;
           })
      .def("degenerate", &ConvexPolygon::degenerate)
      .def("area", &ConvexPolygon::area);

  m.def("convex_hull_2d", [](const std::vector<std::pair<double, double>>& pts) {
    return convex_hull_2d(to_points(pts));
  });
  m.def("hull_distance", [](std::pair<double, double> p, const ConvexPolygon& hull) {
    const HullDistance d = hull_distance({p.first, p.second}, hull);
    return py::make_tuple(d.distance, std::make_pair(d.witness.x, d.witness.y));
  });

  // ---- hull-like property checks ----
  py::class_<HullReport>(m, "HullReport")
      .def_readonly("satisfied", &HullReport::satisfied)
      .def_readonly("max_violation", &HullReport::max_violation)
      .def_readonly("tolerance", &HullReport::tolerance)
      .def_property_readonly("violation_count",
                             [](const HullReport& r) { return r.violations.size(); })
      .def("worst_tag", [](const HullReport& r) {
        return r.violations.empty() ? std::nan("") : r.violations.front().sample.tag;
      });

  m.def("check_hull_property",
        [](const std::vector<std::pair<double, double>>& interior,
           const std::vector<std::pair<double, double>>& boundary, double tol) {
          return check_hull_property(to_tagged(interior), to_points(boundary), tol);
        },
        py::arg("interior_images"), py::arg("boundary_images"), py::arg("tol"));
  m.def("quasiconvex_sup_check",
        [](const std::vector<std::pair<double, double>>& interior,
           const std::vector<std::pair<double, double>>& boundary, int family_size,
           std::uint64_t seed) {
          return quasiconvex_sup_check(to_points(interior), to_points(boundary), family_size, seed);
        },
        py::arg("interior_images"), py::arg("boundary_images"), py::arg("family_size") = 64,
        py::arg("seed") = 0x5eed);
  m.def("support_probe",
        [](const std::vector<std::pair<double, double>>& images, double tol) {
          std::vector<std::pair<std::pair<double, double>, std::pair<double, double>>> out;
          for (const auto& sp : support_probe(to_tagged(images), tol))
            out.push_back({{sp.sample.image.x, sp.sample.image.y},
                           {sp.direction.x, sp.direction.y}});
          return out;
        },
        py::arg("images"), py::arg("tol") = -1.0);
  m.def("arc_interior_samples", [](int n, double scale) {
    std::vector<std::pair<double, double>> out;
    for (const auto& s : arc_interior_samples(n, scale)) out.emplace_back(s.image.x, s.image.y);
    return out;
  }, py::arg("n"), py::arg("scale") = 1.0);

  // ---- fully nonlinear solves ----
  py::class_<MADomain>(m, "MADomain")
      .def_static("square", &MADomain::square)
      .def_static("disk", &MADomain::disk, py::arg("cx"), py::arg("cy"), py::arg("radius"),
                  py::arg("n"))
      .def_property_readonly("grid", [](const MADomain& d) { return d.grid; });

  py::class_<MASolution>(m, "MASolution")
      .def_readonly("residual_norm", &MASolution::residual_norm)
      .def_readonly("convexity_margin", &MASolution::convexity_margin)
      .def_readonly("accepted", &MASolution::accepted)
      .def_property_readonly("u", [](const MASolution& s) { return s.u; });

  m.def("solve_ma",
        [](const MADomain& dom, const ScalarField& h,
           const std::function<double(double, double)>& boundary, double tol) {
          return solve_ma(dom, h, boundary, tol);
        },
        py::arg("domain"), py::arg("h"), py::arg("boundary"), py::arg("tol") = 1e-8);
  m.def("verify_gradient_hull", &verify_gradient_hull, py::arg("solution"), py::arg("tol"));
  m.def("gradient_hull_report", &gradient_hull_report, py::arg("u"), py::arg("domain"),
        py::arg("tol"));
  m.def("jacobian_expansion_check",
        [](const std::function<double(double, double)>& ux,
           const std::function<double(double, double)>& uy,
           const std::function<double(double, double)>& vx,
           const std::function<double(double, double)>& vy,
           const std::function<double(double, double)>& ax,
           const std::function<double(double, double)>& ay,
           const std::function<double(double, double)>& bx,
           const std::function<double(double, double)>& by, const Grid2D& grid,
           const std::vector<double>& lambdas) {
          auto zero = [](double, double) { return 0.0; };
          const C1Fn u{zero, ux, uy}, v{zero, vx, vy}, a{zero, ax, ay}, b{zero, bx, by};
          const auto r = jacobian_expansion_check(u, v, a, b, grid, lambdas);
          py::dict out;
          out["max_discrepancy"] = r.max_discrepancy;
          out["hypothesis_nondegenerate"] = r.hypothesis_nondegenerate;
          out["hypothesis_sign_ok"] = r.hypothesis_sign_ok;
          return out;
        },
        "determinant expansion check from the partial derivatives of f = (u, v), g = (alpha, beta)");

  // ---- radial shooting and the boundary identity ----
  py::class_<Nonlinearity>(m, "Nonlinearity")
      .def_static("minus_sine", &Nonlinearity::minus_sine)
      .def_static("linear", &Nonlinearity::linear)
      .def_static("quintic", &Nonlinearity::quintic)
      .def_static("cubic_minus_linear", &Nonlinearity::cubic_minus_linear)
      .def_static("from_f", &Nonlinearity::from_f, py::arg("f"), py::arg("label"))
      .def_readonly("label", &Nonlinearity::label)
      .def("f", [](const Nonlinearity& nl, double x) { return nl.f(x); })
      .def("F", [](const Nonlinearity& nl, double x) { return nl.F(x); });

  py::class_<RadialProfile>(m, "RadialProfile")
      .def_readonly("r", &RadialProfile::r)
      .def_readonly("u", &RadialProfile::u)
      .def_readonly("du", &RadialProfile::du)
      .def_readonly("energy", &RadialProfile::energy)
      .def_readonly("energy_drift", &RadialProfile::energy_drift)
      .def_readonly("r1", &RadialProfile::r1)
      .def_readonly("blown_up", &RadialProfile::blown_up);

  m.def("radial_shoot", &radial_shoot, py::arg("n"), py::arg("a"), py::arg("b"),
        py::arg("lambda_"), py::arg("nl"), py::arg("s"), py::arg("steps"));
  m.def("shooting_scan", &shooting_scan, py::arg("n"), py::arg("a"), py::arg("b"),
        py::arg("lambda_"), py::arg("nl"), py::arg("s_lo"), py::arg("s_hi"), py::arg("s_count"),
        py::arg("steps") = 2000);
  m.def("pohozaev_residual",
        [](const ScalarField& u, double lambda, const Nonlinearity& nl, int n) {
          const PohozaevResult r = pohozaev_residual(u, lambda, nl, n);
          py::dict out;
          out["lhs"] = r.lhs;
          out["rhs"] = r.rhs;
          out["relative_residual"] = r.relative_residual;
          out["boundary_warning"] = r.boundary_warning;
          out["case_b_obstruction"] = r.case_b_obstruction;
          return out;
        },
        py::arg("u"), py::arg("lambda_"), py::arg("nl"), py::arg("n"));

  // ---- eigenvalue search on the annulus ----
  m.def("lambda1",
        [](const Grid2D& g) {
          const Lambda1Result r = lambda1(g);
          return py::make_tuple(r.lambda1, r.eigenfunction);
        },
        py::arg("polar_grid"));
  m.def("lambda1_radial_oracle", &lambda1_radial_oracle, py::arg("a"), py::arg("b"),
        py::arg("steps") = 20000);
  m.def("radiality_measure", &radiality_measure);

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_readonly("lambda_", &SearchOutcome::lambda)
      .def_readonly("seed_desc", &SearchOutcome::seed_desc)
      .def_readonly("converged", &SearchOutcome::converged)
      .def_readonly("residual_norm", &SearchOutcome::residual_norm)
      .def_readonly("solution_norm", &SearchOutcome::solution_norm)
      .def_readonly("pohozaev_rel", &SearchOutcome::pohozaev_rel)
      .def_readonly("radiality", &SearchOutcome::radiality)
      .def("nonzero", &SearchOutcome::nonzero, py::arg("norm_eps") = 1e-6);

  m.def("newton_search",
        [](const Grid2D& g, double lambda, const std::string& seed_kind, double amplitude,
           int mode_k, std::uint64_t seed, const Nonlinearity& nl, double tol, int max_iter) {
          SeedSpec spec;
          if (seed_kind == "zero") spec.kind = SeedSpec::Kind::Zero;
          else if (seed_kind == "radial-bump") spec.kind = SeedSpec::Kind::RadialBump;
          else if (seed_kind == "angular") spec.kind = SeedSpec::Kind::AngularMode;
          else if (seed_kind == "random") spec.kind = SeedSpec::Kind::RandomField;
          else throw std::invalid_argument("seed_kind: zero|radial-bump|angular|random");
          spec.amplitude = amplitude;
          spec.mode_k = mode_k;
          spec.seed = seed;
          return newton_search(g, lambda, spec, nl, tol, max_iter);
        },
        py::arg("polar_grid"), py::arg("lambda_"), py::arg("seed_kind") = "radial-bump",
        py::arg("amplitude") = 1.0, py::arg("mode_k") = 0, py::arg("seed") = 0,
        py::arg("nl") = Nonlinearity::minus_sine(), py::arg("tol") = 1e-8,
        py::arg("max_iter") = 40);

  // ---- scalar fixed-point threshold ----
  py::class_<ExtremalG>(m, "ExtremalG")
      .def(py::init([](double x0, double mu) { return ExtremalG{x0, mu}; }), py::arg("x0"),
           py::arg("mu") = 1.0);
  m.def("g_eval", [](const ExtremalG& p, double x) { return g_eval(p, x); });

  py::class_<AdmissibleScalar>(m, "AdmissibleScalar")
      .def_static("from_extremal", &AdmissibleScalar::from_extremal)
      .def(py::init([](std::function<double(double)> I, std::function<double(double)> dI,
                       double lipschitz, const std::string& label) {
             AdmissibleScalar m2;
             m2.I = std::move(I);
             m2.dI = std::move(dI);
             m2.lipschitz = lipschitz;
             m2.label = label;
             return m2;
           }),
           py::arg("I"), py::arg("dI"), py::arg("lipschitz"), py::arg("label"))
      .def_readonly("label", &AdmissibleScalar::label);

  m.def("certify",
        [](const AdmissibleScalar& m2, double lo, double hi, int samples) {
          const CertificateResult c = certify(m2, lo, hi, samples);
          return py::make_tuple(c.ok, c.reason);
        },
        py::arg("member"), py::arg("x_lo"), py::arg("x_hi"), py::arg("samples") = 10000);
  m.def("fixed_point_scan", &fixed_point_scan, py::arg("member"), py::arg("lambda_"),
        py::arg("x_lo"), py::arg("x_hi"), py::arg("samples"));

  // ---- finite minimax instances ----
  py::class_<FiniteInstance>(m, "FiniteInstance")
      .def_static("from_scalars", &FiniteInstance::from_scalars, py::arg("J"), py::arg("v"));
  m.def("theta", &theta);
  m.def("minimax_gap",
        [](const FiniteInstance& inst, double lambda, double lo, double hi, double step) {
          const GapResult g = minimax_gap(inst, lambda, {{lo}, {hi}, step});
          py::dict out;
          out["lhs"] = g.lhs;
          out["rhs"] = g.rhs;
          out["strict"] = g.strict;
          out["lhs_argmax"] = g.lhs_argmax[0];
          return out;
        },
        py::arg("instance"), py::arg("lambda_"), py::arg("v_lo"), py::arg("v_hi"),
        py::arg("step") = 1e-4);
  m.def("find_vstar",
        [](const FiniteInstance& inst, double lambda, double lo, double hi, double step) {
          const VStarResult r = find_vstar(inst, lambda, {{lo}, {hi}, step});
          py::dict out;
          out["vstar"] = r.vstar[0];
          out["tie_gap"] = r.tie_gap;
          out["argmin_states"] = r.argmin_states;
          out["value"] = r.value;
          return out;
        },
        py::arg("instance"), py::arg("lambda_"), py::arg("v_lo"), py::arg("v_hi"),
        py::arg("step") = 1e-4);

  // ---- Galerkin energy ----
  py::class_<KirchhoffEnergy>(m, "KirchhoffEnergy")
      .def(py::init<double, double, double, double, double, int, int>(), py::arg("a"),
           py::arg("b"), py::arg("nu"), py::arg("p"), py::arg("lambda_"), py::arg("dim") = 8,
           py::arg("quad_n") = 64)
      .def("set_vstar_coeffs",
           [](KirchhoffEnergy& ke, const std::vector<double>& c) { ke.set_vstar_coeffs(to_vec(c)); })
      .def("evaluate",
           [](const KirchhoffEnergy& ke, const std::vector<double>& c) {
             const auto ev = ke.evaluate(to_vec(c));
             py::dict out;
             out["value"] = ev.value;
             out["gradient"] = from_vec(ev.gradient);
             out["quad_warning"] = ev.quad_warning;
             return out;
           })
      .def("gram_orthonormality_error", &KirchhoffEnergy::gram_orthonormality_error);

  // ---- level-set connectivity ----
  py::class_<SampledSet>(m, "SampledSet")
      .def_readonly("dim", &SampledSet::dim)
      .def_readonly("coords", &SampledSet::coords)
      .def_readonly("radius", &SampledSet::radius)
      .def("size", &SampledSet::size);

  m.def("level_set_sample",
        [](const std::function<double(double)>& A, double x_lo, double x_hi, double y_lo,
           double y_hi, int res_x, int res_y, double eps,
           const std::function<double(double)>& alpha) {
          OperatorSpec spec;
          spec.x_lo = x_lo;
          spec.x_hi = x_hi;
          spec.m = 1;
          spec.A = [A](double x) {
            Eigen::VectorXd v(1);
            v[0] = A(x);
            return v;
          };
          if (alpha) spec.alpha = alpha;
          return level_set_sample(spec, {{y_lo, y_hi}}, {res_x, res_y}, eps);
        },
        py::arg("A"), py::arg("x_lo"), py::arg("x_hi"), py::arg("y_lo"), py::arg("y_hi"),
        py::arg("res_x"), py::arg("res_y"), py::arg("eps"),
        py::arg("alpha") = std::function<double(double)>());
  m.def("connected_components", [](const SampledSet& s) {
    const ComponentLabeling l = connected_components(s);
    return py::make_tuple(l.count, l.labels);
  });
  m.def("theorem_4_2_check",
        [](const std::function<double(double)>& A, double x_lo, double x_hi, double y_lo,
           double y_hi, int res_x, int res_y, double eps) {
          OperatorSpec spec;
          spec.x_lo = x_lo;
          spec.x_hi = x_hi;
          spec.m = 1;
          spec.A = [A](double x) {
            Eigen::VectorXd v(1);
            v[0] = A(x);
            return v;
          };
          const Thm42Result r = theorem_4_2_check(spec, y_lo, y_hi, res_x, res_y, eps);
          py::dict out;
          out["gamma_components"] = r.gamma_components;
          out["domain_components"] = r.domain_components;
          out["equivalent"] = r.equivalent;
          return out;
        },
        py::arg("A"), py::arg("x_lo"), py::arg("x_hi"), py::arg("y_lo"), py::arg("y_hi"),
        py::arg("res_x"), py::arg("res_y"), py::arg("eps"));
}
