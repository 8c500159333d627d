#ifndef NONLINLAB_CONNECTIVITY_HPP
#define NONLINLAB_CONNECTIVITY_HPP

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

namespace nonlinlab {

/// Operator A : X -> R^m on an interval X with an optional level function
/// alpha (default identically 1).
struct OperatorSpec {
  double x_lo = -1.0, x_hi = 1.0;
  int m = 1;
  std::function<Eigen::VectorXd(double)> A;
  std::function<double(double)> alpha;  // empty -> 1
  double alpha_of(double x) const { return alpha ? alpha(x) : 1.0; }
};

/// Finite sample of a subset of R^dim with an adjacency radius for the
/// proximity graph.
struct SampledSet {
  int dim = 2;
  std::vector<double> coords;  // flat, stride dim
  double radius = 0.0;
  std::vector<double> box_lo, box_hi;

  int size() const { return dim ? static_cast<int>(coords.size()) / dim : 0; }
  bool empty_warning = false;  // set when the sample came out empty
};

/// Grid nodes (x, y) with |A(x).y - alpha(x)| <= eps (1 + |A(x)||y|).
/// Adjacency radius is 1.5x the grid cell diagonal.
SampledSet level_set_sample(const OperatorSpec& spec,
                            const std::vector<std::pair<double, double>>& y_box,
                            const std::vector<int>& resolution,  // x axis then y axes
                            double eps);

struct ComponentLabeling {
  int count = 0;
  std::vector<int> labels;  // per point; numbered by lexicographic representative
};

/// Union-find over the radius-r adjacency graph.
ComponentLabeling connected_components(const SampledSet& set);

struct Thm42Result {
  int gamma_components = 0;
  int domain_components = 0;  // components of {x : |A(x)| > eps}
  bool equivalent = false;    // both >= 2 or both == 1
  std::vector<double> zero_xs;
  SampledSet gamma_sample;
  ComponentLabeling gamma_labels;
};

/// Compares disconnection of the level set {A(x) y = 1} with disconnection
/// of the zero-free part of the domain, on grids.
Thm42Result theorem_4_2_check(const OperatorSpec& spec, double y_lo, double y_hi, int res_x,
                              int res_y, double eps);

}  // namespace nonlinlab

#endif
