#ifndef NONLINLAB_MINIMAX_HPP
#define NONLINLAB_MINIMAX_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nonlinlab {

/// Finite instance of the strict-minimax setting: abstract states with
/// values J, a non-constant placement x -> v_x in R^m, and a gauge phi >= 0
/// vanishing only at 0 (default phi(w) = |w|^2 / 2). The pairing is
/// Psi(x, v) = v_x - v.
struct FiniteInstance {
  std::vector<double> J;
  std::vector<Eigen::VectorXd> v;
  std::function<double(const Eigen::VectorXd&)> phi;  // empty -> |w|^2/2
  int m = 1;

  static FiniteInstance from_scalars(std::vector<double> J, std::vector<double> v_scalars);
  double phi_of(const Eigen::VectorXd& w) const;
  std::vector<int> global_minima() const;  // exact-value argmin set
  void validate() const;
};

/// Brute-force infimum of (J(x) - J(u)) / phi(v_x - v_u) over global minima
/// u and states x with v_x != v_u.
double theta(const FiniteInstance& inst);

/// Uniform tensor grid in R^m.
struct VGrid {
  std::vector<double> lo, hi;
  double step = 1e-2;
};

struct GapResult {
  double lhs = 0.0;  // sup_v inf_x (J - lambda phi(v_x - v)), grid + local refinement
  double rhs = 0.0;  // inf_x sup_z (J(x) - lambda phi(v_x - v_z))
  bool strict = false;
  Eigen::VectorXd lhs_argmax;
  double grid_step = 0.0;
};

/// Two sides of the strict minimax inequality on a finite instance. The
/// grid maximum of the concave lower envelope is polished by coordinate
/// ternary search so the reported lhs approximates sup over all of R^m.
GapResult minimax_gap(const FiniteInstance& inst, double lambda, const VGrid& grid,
                      bool refine = true);

struct VStarResult {
  Eigen::VectorXd vstar;
  std::vector<int> argmin_states;  // ties within tie_tol at vstar
  double tie_gap = 0.0;            // second smallest - smallest branch value
  double value = 0.0;
  double tie_tol = 1e-9;
};

/// Parameter v* at which x -> J(x) - lambda phi(v_x - v*) has (at least) a
/// two-way tie of global minima; the envelope argmax is refined until the
/// tie gap is resolved or reported as the tightest near-tie found.
VStarResult find_vstar(const FiniteInstance& inst, double lambda, const VGrid& grid);

/// Seeded random scalar instance used by the verification corpus: 2..6
/// states with distinct J values and distinct placements.
FiniteInstance random_instance(std::uint64_t seed);

}  // namespace nonlinlab

#endif
