#ifndef NONLINLAB_KIRCHHOFF_HPP
#define NONLINLAB_KIRCHHOFF_HPP

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

namespace nonlinlab {

/// Galerkin model of the nonlocal energy
///   E(u) = a/2 ||u||^2 + b/4 ||u||^4
///          - nu/(p+1) int |u|^{p+1} - lambda/2 int |u - v*|^2
/// on the span of the first `dim` Dirichlet Laplacian eigenfunctions of the
/// unit square, orthonormalized in the gradient inner product, so the norm
/// of u = sum c_k psi_k is |c|. The local integrals use a tensor trapezoid
/// rule with quad_n intervals per axis.
class KirchhoffEnergy {
 public:
  KirchhoffEnergy(double a, double b, double nu, double p, double lambda, int dim = 8,
                  int quad_n = 64);

  void set_vstar_coeffs(const Eigen::VectorXd& coeffs);
  void set_vstar_field(const std::function<double(double, double)>& f);

  int dim() const { return dim_; }
  int quad_n() const { return quad_n_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double nu() const { return nu_; }
  double p() const { return p_; }
  double lambda() const { return lambda_; }
  const std::vector<std::pair<int, int>>& modes() const { return modes_; }

  /// Basis values on the quadrature grid (row k = psi_k at all nodes).
  const Eigen::MatrixXd& basis_values() const { return basis_; }
  const Eigen::VectorXd& quad_weights() const { return weights_; }

  /// Worst |<grad psi_i, grad psi_j> - delta_ij| over all pairs, computed by
  /// quadrature of the analytic gradients.
  double gram_orthonormality_error() const;

  struct Eval {
    double value = 0.0;
    Eigen::VectorXd gradient;
    bool quad_warning = false;   // power p+1 underresolved on the grid
    double refined_value = 0.0;  // re-evaluation at doubled quadrature
  };
  Eval evaluate(const Eigen::VectorXd& coeffs) const;

  /// Samples t -> evaluate(t * direction).value.
  std::vector<std::pair<double, double>> ray_probe(const Eigen::VectorXd& direction,
                                                   const std::vector<double>& ts) const;

 private:
  double value_on_grid(const Eigen::VectorXd& coeffs, const Eigen::MatrixXd& basis,
                       const Eigen::VectorXd& weights, const Eigen::VectorXd& vstar) const;

  double a_, b_, nu_, p_, lambda_;
  int dim_, quad_n_;
  std::vector<std::pair<int, int>> modes_;
  Eigen::MatrixXd basis_;       // dim x nodes
  Eigen::VectorXd weights_;     // nodes
  Eigen::VectorXd vstar_;       // nodes
  std::function<double(double, double)> vstar_field_;
  Eigen::VectorXd vstar_coeffs_;
  bool vstar_from_coeffs_ = false;
};

}  // namespace nonlinlab

#endif
