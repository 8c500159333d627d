#include "nonlinlab/annulus.hpp"

#include <Eigen/SparseLU>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "nonlinlab/parallel.hpp"

namespace nonlinlab {

namespace {

// Conservative 5-point Laplacian on the interior of a polar annulus:
// (1/r)(r u_r)_r + (1/r^2) u_tt, theta periodic, zero Dirichlet at r = a, b.
// Unknown ordering: (i-1)*ntheta + j for i in [1, nr-2].
Eigen::SparseMatrix<double> polar_laplacian(const Grid2D& g) {
  const int nt = g.ny, ni = g.nx - 2;
  const double hr = g.hx(), ht = g.hy();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(ni) * nt * 5);
  auto idx = [nt](int i, int j) { return (i - 1) * nt + ((j % nt) + nt) % nt; };
  for (int i = 1; i <= ni; ++i) {
    const double r = g.r(i);
    const double rp = 0.5 * (g.r(i) + g.r(i + 1));
    const double rm = 0.5 * (g.r(i) + g.r(i - 1));
    const double cr = 1.0 / (r * hr * hr);
    const double ct = 1.0 / (r * r * ht * ht);
    for (int j = 0; j < nt; ++j) {
      const int k = idx(i, j);
      trip.emplace_back(k, k, -(rp + rm) * cr - 2.0 * ct);
      if (i + 1 <= ni) trip.emplace_back(k, idx(i + 1, j), rp * cr);
      if (i - 1 >= 1) trip.emplace_back(k, idx(i - 1, j), rm * cr);
      trip.emplace_back(k, idx(i, j + 1), ct);
      trip.emplace_back(k, idx(i, j - 1), ct);
    }
  }
  Eigen::SparseMatrix<double> A(ni * nt, ni * nt);
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

ScalarField embed_interior(const Grid2D& g, const Eigen::VectorXd& v) {
  ScalarField u(g, 0.0);
  const int nt = g.ny;
  for (int i = 1; i <= g.nx - 2; ++i)
    for (int j = 0; j < nt; ++j) u.at(i, j) = v[(i - 1) * nt + j];
  return u;
}

Eigen::VectorXd restrict_interior(const ScalarField& u) {
  const Grid2D& g = u.grid();
  const int nt = g.ny;
  Eigen::VectorXd v((g.nx - 2) * nt);
  for (int i = 1; i <= g.nx - 2; ++i)
    for (int j = 0; j < nt; ++j) v[(i - 1) * nt + j] = u(i, j);
  return v;
}

// r-weighted inner product over interior nodes (hr*ht cancels in quotients).
double weighted_dot(const Grid2D& g, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const int nt = g.ny;
  double s = 0.0;
  for (int i = 1; i <= g.nx - 2; ++i) {
    const double r = g.r(i);
    for (int j = 0; j < nt; ++j) s += r * a[(i - 1) * nt + j] * b[(i - 1) * nt + j];
  }
  return s;
}

}  // namespace

Lambda1Result lambda1(const Grid2D& g, double rel_tol, int max_iter) {
  if (!g.polar()) throw std::invalid_argument("lambda1: polar annulus grid required");

  const Eigen::SparseMatrix<double> A = (-polar_laplacian(g)).eval();  // positive definite
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.analyzePattern(A);
  lu.factorize(A);
  if (lu.info() != Eigen::Success) throw std::runtime_error("lambda1: factorization failed");

  const int n = static_cast<int>(A.rows());
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  v /= std::sqrt(weighted_dot(g, v, v));

  Lambda1Result out;
  out.eigenfunction = ScalarField(g, 0.0);
  double lambda_prev = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    Eigen::VectorXd w = lu.solve(v);
    w /= std::sqrt(weighted_dot(g, w, w));
    const double lam = weighted_dot(g, w, A * w) / weighted_dot(g, w, w);
    out.rayleigh_trace.push_back(lam);
    v = w;
    out.iterations = it;
    if (it > 1 && std::abs(lam - lambda_prev) <= rel_tol * std::abs(lam)) {
      out.lambda1 = lam;
      ScalarField ef = embed_interior(g, v);
      double mean = 0.0;
      for (double x : ef.values()) mean += x;
      if (mean < 0.0)
        for (double& x : ef.values()) x = -x;
      const double nrm = l2_norm(ef);
      for (double& x : ef.values()) x /= nrm;
      out.eigenfunction = ef;
      return out;
    }
    lambda_prev = lam;
  }
  std::ostringstream msg;
  msg << "lambda1: inverse iteration stagnated; Rayleigh trace:";
  for (double q : out.rayleigh_trace) msg << ' ' << q;
  throw std::runtime_error(msg.str());
}

double lambda1_radial_oracle(double a, double b, int steps) {
  const Nonlinearity lin = Nonlinearity::linear();
  auto endpoint = [&](double lam) {
    return radial_shoot(2, a, b, lam, lin, 1.0, steps).u.back();
  };
  // S(b; lambda) changes sign at the first eigenvalue; bracket then bisect.
  double lo = 1e-3, hi = 2.0;
  double flo = endpoint(lo);
  while (endpoint(hi) * flo > 0.0) {
    hi *= 1.5;
    if (hi > 1e4) throw std::runtime_error("lambda1_radial_oracle: no bracket");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (endpoint(mid) * flo <= 0.0) hi = mid;
    else {
      lo = mid;
      flo = endpoint(lo);
    }
    if (hi - lo < 1e-12 * hi) break;
  }
  return 0.5 * (lo + hi);
}

double radiality_measure(const ScalarField& u) {
  const Grid2D& g = u.grid();
  if (!g.polar()) throw std::invalid_argument("radiality_measure: polar grid required");
  ScalarField dev(g);
  for (int i = 0; i < g.nx; ++i) {
    double mean = 0.0;
    for (int j = 0; j < g.ny; ++j) mean += u(i, j);
    mean /= g.ny;
    for (int j = 0; j < g.ny; ++j) dev.at(i, j) = u(i, j) - mean;
  }
  const double denom = l2_norm(u);
  if (denom == 0.0) return 0.0;
  return l2_norm(dev) / denom;
}

std::string SeedSpec::describe() const {
  std::ostringstream s;
  switch (kind) {
    case Kind::Zero: s << "zero"; break;
    case Kind::RadialBump: s << "radial-bump(A=" << amplitude << ")"; break;
    case Kind::AngularMode: s << "angular(k=" << mode_k << ",A=" << amplitude << ")"; break;
    case Kind::RandomField: s << "random(A=" << amplitude << ",seed=" << seed << ")"; break;
    case Kind::Continuation: s << "continuation"; break;
  }
  return s.str();
}

ScalarField SeedSpec::build(const Grid2D& g) const {
  if (!g.polar()) throw std::invalid_argument("SeedSpec: polar grid required");
  const double a = g.x0, b = g.x1;
  switch (kind) {
    case Kind::Zero:
      return ScalarField(g, 0.0);
    case Kind::RadialBump:
      return ScalarField::sample_polar(g, [&](double r, double) {
        return amplitude * std::sin(std::numbers::pi * (r - a) / (b - a));
      });
    case Kind::AngularMode:
      return ScalarField::sample_polar(g, [&](double r, double t) {
        return amplitude * std::sin(std::numbers::pi * (r - a) / (b - a)) * std::cos(mode_k * t);
      });
    case Kind::RandomField: {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> U(-1.0, 1.0);
      ScalarField u(g, 0.0);
      for (int i = 1; i <= g.nx - 2; ++i) {
        const double envelope = std::sin(std::numbers::pi * (g.r(i) - a) / (b - a));
        for (int j = 0; j < g.ny; ++j) u.at(i, j) = amplitude * envelope * U(rng);
      }
      return u;
    }
    case Kind::Continuation: {
      ScalarField u(g, 0.0);
      if (continuation_values.size() != static_cast<size_t>(g.node_count()))
        throw std::invalid_argument("continuation seed does not match grid");
      u.values() = continuation_values;
      return u;
    }
  }
  throw std::logic_error("unreachable");
}

SearchOutcome newton_search(const Grid2D& g, double lambda, const SeedSpec& seed,
                            const Nonlinearity& nl, double tol, int max_iter) {
  if (!(lambda > 0.0)) throw std::invalid_argument("newton_search: lambda must be > 0");
  const Eigen::SparseMatrix<double> L = polar_laplacian(g);

  VecResidualFn residual = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    Eigen::VectorXd r = L * x;
    for (int k = 0; k < x.size(); ++k) r[k] += lambda * nl.f(x[k]);
    return r;
  };
  VecJacobianFn jacobian = [&](const Eigen::VectorXd& x) {
    SparseSystem sys(static_cast<int>(x.size()));
    for (int k = 0; k < L.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(L, k); it; ++it)
        sys.add(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
    for (int k = 0; k < x.size(); ++k) sys.add(k, k, lambda * nl.derivative(x[k]));
    return sys;
  };

  NewtonOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  const NewtonResult nres = newton_solve_vec(residual, jacobian, restrict_interior(seed.build(g)), opts);

  SearchOutcome out;
  out.lambda = lambda;
  out.seed_desc = seed.describe();
  out.converged = nres.converged;
  out.residual_norm = nres.residual_norm;
  const ScalarField u = embed_interior(g, nres.x);
  out.solution_norm = l2_norm(u);
  out.radiality = radiality_measure(u);
  out.pohozaev_rel = pohozaev_residual(u, lambda, nl, 2).relative_residual;
  if (nres.converged) out.solution = u;
  return out;
}

std::vector<SeedSpec> seed_corpus(std::uint64_t seed, const std::vector<double>& bump_amplitudes,
                                  const std::vector<int>& angular_modes, double angular_amplitude,
                                  const std::vector<double>& random_amplitudes) {
  std::vector<SeedSpec> corpus;
  corpus.push_back({SeedSpec::Kind::Zero, 0.0, 0, 0, {}});
  for (double A : bump_amplitudes) corpus.push_back({SeedSpec::Kind::RadialBump, A, 0, 0, {}});
  for (int k : angular_modes)
    corpus.push_back({SeedSpec::Kind::AngularMode, angular_amplitude, k, 0, {}});
  int i = 0;
  for (double A : random_amplitudes)
    corpus.push_back({SeedSpec::Kind::RandomField, A, 0, seed + 101 * (++i), {}});
  return corpus;
}

std::vector<SeedSpec> default_seed_corpus(std::uint64_t seed) {
  const std::vector<double> amps = {1.0, std::numbers::pi, 2.0 * std::numbers::pi,
                                    4.0 * std::numbers::pi};
  return seed_corpus(seed, amps, {1, 2, 3, 4, 5, 6}, std::numbers::pi, amps);
}

SweepResult continuation_sweep(const Grid2D& g, double lambda_start, double lambda_end, int steps,
                               const std::vector<SeedSpec>& seed_corpus, const Nonlinearity& nl,
                               double tol, int max_iter, int threads) {
  if (!(lambda_start < lambda_end)) throw std::invalid_argument("sweep: lambda_start < lambda_end");
  if (steps < 2) throw std::invalid_argument("sweep: steps >= 2");

  SweepResult result;
  result.verdict = "no-nonzero-found-in-protocol";
  std::vector<SeedSpec> carried;  // continuation seeds from nonzero finds

  for (int si = 0; si < steps; ++si) {
    const double lam = lambda_start + (lambda_end - lambda_start) * si / (steps - 1);
    result.lambdas.push_back(lam);
    std::vector<SeedSpec> seeds = seed_corpus;
    seeds.insert(seeds.end(), carried.begin(), carried.end());
    std::vector<SearchOutcome> round(seeds.size());
    parallel_for(static_cast<int>(seeds.size()), threads, [&](int k) {
      round[k] = newton_search(g, lam, seeds[k], nl, tol, max_iter);
    });
    carried.clear();
    for (auto& o : round) {
      if (o.nonzero() && o.solution) {
        result.verdict = "nonzero-solution-found";
        SeedSpec cont;
        cont.kind = SeedSpec::Kind::Continuation;
        cont.continuation_values = o.solution->values();
        carried.push_back(std::move(cont));
      }
      result.outcomes.push_back(std::move(o));
    }
  }
  return result;
}

}  // namespace nonlinlab
