#include "nonlinlab/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace nonlinlab {

FiniteInstance FiniteInstance::from_scalars(std::vector<double> J, std::vector<double> v_scalars) {
  FiniteInstance inst;
  inst.J = std::move(J);
  inst.m = 1;
  for (double s : v_scalars) {
    Eigen::VectorXd w(1);
    w[0] = s;
    inst.v.push_back(w);
  }
  inst.validate();
  return inst;
}

double FiniteInstance::phi_of(const Eigen::VectorXd& w) const {
  if (phi) {
    const double val = phi(w);
    if (!(val >= 0.0)) throw std::invalid_argument("phi must be nonnegative");
    return val;
  }
  return 0.5 * w.squaredNorm();
}

std::vector<int> FiniteInstance::global_minima() const {
  const double mn = *std::min_element(J.begin(), J.end());
  std::vector<int> out;
  for (size_t k = 0; k < J.size(); ++k)
    if (J[k] == mn) out.push_back(static_cast<int>(k));
  return out;
}

void FiniteInstance::validate() const {
  if (J.empty() || J.size() != v.size())
    throw std::invalid_argument("instance needs matching nonempty J and v");
  for (const auto& w : v)
    if (w.size() != m) throw std::invalid_argument("placement dimension mismatch");
  bool nonconstant = false;
  for (size_t k = 1; k < v.size(); ++k)
    if (v[k] != v[0]) nonconstant = true;
  if (!nonconstant) throw std::invalid_argument("placement x -> v_x must not be constant");
  if (phi) {
    // sampled gauge checks: phi(0) = 0 and phi > 0 away from 0
    if (phi(Eigen::VectorXd::Zero(m)) != 0.0)
      throw std::invalid_argument("phi(0) must be 0");
    std::mt19937_64 rng(2718281828);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int trial = 0; trial < 64; ++trial) {
      Eigen::VectorXd w(m);
      for (int d = 0; d < m; ++d) w[d] = U(rng);
      if (w.norm() < 1e-3) continue;
      if (!(phi(w) > 0.0)) throw std::invalid_argument("phi must vanish only at 0 (sampled)");
    }
  }
}

double theta(const FiniteInstance& inst) {
  inst.validate();
  const std::vector<int> minima = inst.global_minima();
  double best = std::numeric_limits<double>::infinity();
  bool any = false;
  for (int u : minima)
    for (size_t x = 0; x < inst.J.size(); ++x) {
      if (inst.v[x] == inst.v[u]) continue;
      any = true;
      best = std::min(best, (inst.J[x] - inst.J[u]) / inst.phi_of(inst.v[x] - inst.v[u]));
    }
  if (!any) throw std::invalid_argument("theta: no admissible pair (constant placement?)");
  return best;
}

namespace {

double envelope(const FiniteInstance& inst, double lambda, const Eigen::VectorXd& v) {
  double e = std::numeric_limits<double>::infinity();
  for (size_t x = 0; x < inst.J.size(); ++x)
    e = std::min(e, inst.J[x] - lambda * inst.phi_of(inst.v[x] - v));
  return e;
}

// Enumerate the tensor grid, calling body(v) for each node.
void for_each_grid_point(const VGrid& grid, int m,
                         const std::function<void(const Eigen::VectorXd&)>& body) {
  if (static_cast<int>(grid.lo.size()) != m || static_cast<int>(grid.hi.size()) != m)
    throw std::invalid_argument("v_grid dimension mismatch");
  std::vector<int> counts(m);
  for (int d = 0; d < m; ++d) {
    if (!(grid.hi[d] >= grid.lo[d]) || !(grid.step > 0.0))
      throw std::invalid_argument("v_grid ranges/step invalid");
    counts[d] = static_cast<int>(std::floor((grid.hi[d] - grid.lo[d]) / grid.step + 1e-12)) + 1;
  }
  std::vector<int> c(m, 0);
  Eigen::VectorXd v(m);
  for (;;) {
    for (int d = 0; d < m; ++d) v[d] = grid.lo[d] + c[d] * grid.step;
    body(v);
    int d = 0;
    for (; d < m; ++d) {
      if (++c[d] < counts[d]) break;
      c[d] = 0;
    }
    if (d == m) break;
  }
}

// Coordinate-wise ternary ascent of the concave envelope from v0.
Eigen::VectorXd refine_envelope_max(const FiniteInstance& inst, double lambda, Eigen::VectorXd v0,
                                    double radius) {
  const int m = static_cast<int>(v0.size());
  for (int sweep = 0; sweep < 4 * m; ++sweep) {
    for (int d = 0; d < m; ++d) {
      double lo = v0[d] - radius, hi = v0[d] + radius;
      for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        Eigen::VectorXd a = v0, b = v0;
        a[d] = m1;
        b[d] = m2;
        if (envelope(inst, lambda, a) < envelope(inst, lambda, b)) lo = m1;
        else hi = m2;
      }
      v0[d] = 0.5 * (lo + hi);
    }
    radius = std::max(radius * 0.5, 1e-9);
  }
  return v0;
}

}  // namespace

GapResult minimax_gap(const FiniteInstance& inst, double lambda, const VGrid& grid, bool refine) {
  inst.validate();
  GapResult res;
  res.grid_step = grid.step;

  double best = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_v(inst.m);
  bool any = false;
  for_each_grid_point(grid, inst.m, [&](const Eigen::VectorXd& v) {
    any = true;
    const double e = envelope(inst, lambda, v);
    if (e > best) {
      best = e;
      best_v = v;
    }
  });
  if (!any) throw std::invalid_argument("minimax_gap: empty v_grid");

  if (refine) {
    best_v = refine_envelope_max(inst, lambda, best_v, grid.step);
    best = envelope(inst, lambda, best_v);
  }
  res.lhs = best;
  res.lhs_argmax = best_v;

  res.rhs = std::numeric_limits<double>::infinity();
  for (size_t x = 0; x < inst.J.size(); ++x) {
    double sup = -std::numeric_limits<double>::infinity();
    for (size_t z = 0; z < inst.J.size(); ++z)
      sup = std::max(sup, inst.J[x] - lambda * inst.phi_of(inst.v[x] - inst.v[z]));
    res.rhs = std::min(res.rhs, sup);
  }
  res.strict = res.lhs < res.rhs - 1e-12;
  return res;
}

VStarResult find_vstar(const FiniteInstance& inst, double lambda, const VGrid& grid) {
  const GapResult gap = minimax_gap(inst, lambda, grid, /*refine=*/true);
  VStarResult out;
  out.vstar = gap.lhs_argmax;

  std::vector<double> branch(inst.J.size());
  for (size_t x = 0; x < inst.J.size(); ++x)
    branch[x] = inst.J[x] - lambda * inst.phi_of(inst.v[x] - out.vstar);
  std::vector<double> sorted = branch;
  std::sort(sorted.begin(), sorted.end());
  out.value = sorted[0];
  out.tie_gap = sorted.size() > 1 ? sorted[1] - sorted[0] : std::numeric_limits<double>::infinity();
  for (size_t x = 0; x < branch.size(); ++x)
    if (branch[x] - sorted[0] <= out.tie_tol) out.argmin_states.push_back(static_cast<int>(x));
  return out;
}

FiniteInstance random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(2, 6);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const int n = size_dist(rng);
  std::vector<double> J(n), v(n);
  for (int k = 0; k < n; ++k) {
    J[k] = U(rng);
    v[k] = 2.0 * U(rng) - 1.0;
  }
  // Distinct J values (unique argmin) and distinct placements.
  std::sort(J.begin(), J.end());
  for (int k = 1; k < n; ++k)
    if (J[k] - J[k - 1] < 1e-3) J[k] = J[k - 1] + 1e-3 + U(rng) * 0.1;
  std::shuffle(J.begin(), J.end(), rng);
  std::sort(v.begin(), v.end());
  for (int k = 1; k < n; ++k)
    if (v[k] - v[k - 1] < 1e-3) v[k] = v[k - 1] + 1e-3 + U(rng) * 0.1;
  std::shuffle(v.begin(), v.end(), rng);
  return FiniteInstance::from_scalars(std::move(J), std::move(v));
}

}  // namespace nonlinlab
