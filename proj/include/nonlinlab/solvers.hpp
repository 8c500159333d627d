#ifndef NONLINLAB_SOLVERS_HPP
#define NONLINLAB_SOLVERS_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonlinlab/grid.hpp"

namespace nonlinlab {

/// Sparse linear system in triplet form; assembly sums duplicates so the
/// assembled matrix has one entry per (row, col).
struct SparseSystem {
  int dimension = 0;
  std::vector<Eigen::Triplet<double>> triplets;
  Eigen::VectorXd rhs;

  explicit SparseSystem(int dim) : dimension(dim), rhs(Eigen::VectorXd::Zero(dim)) {}
  void add(int row, int col, double value);
  Eigen::SparseMatrix<double> assemble() const;
  /// Direct sparse LU solve of A x = rhs.
  Eigen::VectorXd solve() const;
};

struct NewtonOptions {
  double tol = 1e-8;          // nonlinear residual tolerance (sup norm)
  int max_iter = 50;
  double step_floor = 1e-6;   // damping: halve until residual decreases
};

struct NewtonTrace {
  std::vector<double> residual_norms;  // per accepted iterate, including start
  std::vector<double> step_sizes;      // accepted damping factors
};

struct NewtonResult {
  Eigen::VectorXd x;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  NewtonTrace trace;
};

using VecResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using VecJacobianFn = std::function<SparseSystem(const Eigen::VectorXd&)>;

/// Damped Newton on vectors. Damping halves the step while the sup-norm
/// residual fails to decrease, down to step_floor; a floored step without
/// decrease stops the iteration as non-converged.
NewtonResult newton_solve_vec(const VecResidualFn& residual, const VecJacobianFn& jacobian,
                              Eigen::VectorXd x0, const NewtonOptions& opts = {});

/// Divergence carries the last iterate and the residual-norm history.
class newton_divergence : public std::runtime_error {
 public:
  newton_divergence(const std::string& msg, NewtonResult last)
      : std::runtime_error(msg), result(std::move(last)) {}
  NewtonResult result;
};

using FieldResidualFn = std::function<ScalarField(const ScalarField&)>;
using FieldJacobianFn = std::function<SparseSystem(const ScalarField&)>;

/// Field-valued Newton driver; throws newton_divergence when max_iter is
/// exceeded or damping stalls.
ScalarField newton_solve(const FieldResidualFn& residual, const FieldJacobianFn& jacobian,
                         const ScalarField& u0, double tol = 1e-8, int max_iter = 50);

}  // namespace nonlinlab

#endif
