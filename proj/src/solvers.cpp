#include "nonlinlab/solvers.hpp"

#include <Eigen/SparseLU>
#include <cmath>

namespace nonlinlab {

void SparseSystem::add(int row, int col, double value) {
  if (row < 0 || row >= dimension || col < 0 || col >= dimension)
    throw std::invalid_argument("sparse triplet index out of range");
  triplets.emplace_back(row, col, value);
}

Eigen::SparseMatrix<double> SparseSystem::assemble() const {
  Eigen::SparseMatrix<double> A(dimension, dimension);
  A.setFromTriplets(triplets.begin(), triplets.end());  // sums duplicates
  return A;
}

Eigen::VectorXd SparseSystem::solve() const {
  Eigen::SparseMatrix<double> A = assemble();
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.analyzePattern(A);
  lu.factorize(A);
  if (lu.info() != Eigen::Success) throw std::runtime_error("sparse LU factorization failed");
  Eigen::VectorXd x = lu.solve(rhs);
  if (lu.info() != Eigen::Success) throw std::runtime_error("sparse LU solve failed");
  return x;
}

namespace {
double sup_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
}

NewtonResult newton_solve_vec(const VecResidualFn& residual, const VecJacobianFn& jacobian,
                              Eigen::VectorXd x0, const NewtonOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("newton tolerance must be positive");
  NewtonResult res;
  res.x = std::move(x0);
  Eigen::VectorXd F = residual(res.x);
  double fn = sup_norm(F);
  res.trace.residual_norms.push_back(fn);

  for (int it = 0; it < opts.max_iter; ++it) {
    if (fn <= opts.tol) {
      res.converged = true;
      break;
    }
    SparseSystem sys = jacobian(res.x);
    sys.rhs = -F;
    Eigen::VectorXd delta = sys.solve();

    double s = 1.0;
    bool accepted = false;
    Eigen::VectorXd x_new, F_new;
    double fn_new = fn;
    while (s >= opts.step_floor) {
      x_new = res.x + s * delta;
      F_new = residual(x_new);
      fn_new = sup_norm(F_new);
      if (fn_new < fn) {
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) break;  // damping stalled at the floor

    res.x = std::move(x_new);
    F = std::move(F_new);
    fn = fn_new;
    res.iterations = it + 1;
    res.trace.residual_norms.push_back(fn);
    res.trace.step_sizes.push_back(s);
  }
  res.residual_norm = fn;
  res.converged = res.converged || fn <= opts.tol;
  return res;
}

ScalarField newton_solve(const FieldResidualFn& residual, const FieldJacobianFn& jacobian,
                         const ScalarField& u0, double tol, int max_iter) {
  if (!u0.all_finite()) throw std::invalid_argument("newton_solve: non-finite initial guess");
  const Grid2D grid = u0.grid();
  auto wrap = [&](const Eigen::VectorXd& x) {
    return ScalarField(grid, std::vector<double>(x.data(), x.data() + x.size()));
  };
  VecResidualFn rf = [&](const Eigen::VectorXd& x) {
    ScalarField r = residual(wrap(x));
    return Eigen::Map<const Eigen::VectorXd>(r.values().data(), r.values().size()).eval();
  };
  VecJacobianFn jf = [&](const Eigen::VectorXd& x) { return jacobian(wrap(x)); };

  Eigen::VectorXd x0 = Eigen::Map<const Eigen::VectorXd>(u0.values().data(), u0.values().size());
  NewtonOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  NewtonResult res = newton_solve_vec(rf, jf, x0, opts);
  if (!res.converged)
    throw newton_divergence("newton_solve failed to reach tolerance", res);
  return wrap(res.x);
}

}  // namespace nonlinlab
