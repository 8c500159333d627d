#include "nonlinlab/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nonlinlab {

SampledSet level_set_sample(const OperatorSpec& spec,
                            const std::vector<std::pair<double, double>>& y_box,
                            const std::vector<int>& resolution, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("level_set_sample: eps > 0 required");
  if (static_cast<int>(y_box.size()) != spec.m)
    throw std::invalid_argument("level_set_sample: y_box dimension mismatch");
  if (static_cast<int>(resolution.size()) != spec.m + 1)
    throw std::invalid_argument("level_set_sample: need a resolution per axis");
  for (int r : resolution)
    if (r < 16) throw std::invalid_argument("level_set_sample: resolution >= 16 per axis");

  const int dim = spec.m + 1;
  SampledSet out;
  out.dim = dim;
  out.box_lo.resize(dim);
  out.box_hi.resize(dim);
  out.box_lo[0] = spec.x_lo;
  out.box_hi[0] = spec.x_hi;
  for (int d = 0; d < spec.m; ++d) {
    out.box_lo[d + 1] = y_box[d].first;
    out.box_hi[d + 1] = y_box[d].second;
  }

  std::vector<double> h(dim);
  double diag2 = 0.0;
  for (int d = 0; d < dim; ++d) {
    h[d] = (out.box_hi[d] - out.box_lo[d]) / (resolution[d] - 1);
    diag2 += h[d] * h[d];
  }
  out.radius = 1.5 * std::sqrt(diag2);

  // Cache A along the x axis, then walk the y tensor grid per column.
  const int nx = resolution[0];
  Eigen::VectorXd y(spec.m);
  std::vector<int> c(spec.m, 0);
  for (int ix = 0; ix < nx; ++ix) {
    const double x = out.box_lo[0] + ix * h[0];
    const Eigen::VectorXd Ax = spec.A(x);
    if (Ax.size() != spec.m) throw std::invalid_argument("A(x) dimension mismatch");
    const double ax_norm = Ax.norm();
    const double alpha = spec.alpha_of(x);
    std::fill(c.begin(), c.end(), 0);
    for (;;) {
      for (int d = 0; d < spec.m; ++d) y[d] = out.box_lo[d + 1] + c[d] * h[d + 1];
      const double val = Ax.dot(y) - alpha;
      if (std::abs(val) <= eps * (1.0 + ax_norm * y.norm())) {
        out.coords.push_back(x);
        for (int d = 0; d < spec.m; ++d) out.coords.push_back(y[d]);
      }
      int d = 0;
      for (; d < spec.m; ++d) {
        if (++c[d] < resolution[d + 1]) break;
        c[d] = 0;
      }
      if (d == spec.m) break;
    }
  }
  out.empty_warning = out.coords.empty();
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ComponentLabeling connected_components(const SampledSet& set) {
  const int n = set.size();
  if (n == 0) throw std::invalid_argument("connected_components: empty set");
  const int dim = set.dim;
  const double r = set.radius, r2 = r * r;

  // Spatial hash with cell size = radius; neighbours live in adjacent cells.
  using Cell = std::vector<int>;
  std::map<std::vector<long>, Cell> buckets;
  auto cell_of = [&](int p) {
    std::vector<long> key(dim);
    for (int d = 0; d < dim; ++d)
      key[d] = static_cast<long>(std::floor(set.coords[p * dim + d] / r));
    return key;
  };
  for (int p = 0; p < n; ++p) buckets[cell_of(p)].push_back(p);

  UnionFind uf(n);
  auto dist2 = [&](int a, int b) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) {
      const double t = set.coords[a * dim + d] - set.coords[b * dim + d];
      s += t * t;
    }
    return s;
  };
  std::vector<long> nb(dim);
  for (const auto& [key, cell] : buckets) {
    // enumerate neighbour cells with offsets in {-1,0,1}^dim
    std::vector<int> off(dim, -1);
    for (;;) {
      for (int d = 0; d < dim; ++d) nb[d] = key[d] + off[d];
      auto it = buckets.find(nb);
      if (it != buckets.end()) {
        for (int a : cell)
          for (int b : it->second)
            if (a < b && dist2(a, b) <= r2) uf.unite(a, b);
      }
      int d = 0;
      for (; d < dim; ++d) {
        if (++off[d] <= 1) break;
        off[d] = -1;
      }
      if (d == dim) break;
    }
  }

  // Deterministic labels: order components by their lexicographically
  // smallest point.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    for (int d = 0; d < dim; ++d) {
      const double xa = set.coords[a * dim + d], xb = set.coords[b * dim + d];
      if (xa != xb) return xa < xb;
    }
    return a < b;
  });
  ComponentLabeling lab;
  lab.labels.assign(n, -1);
  std::map<int, int> rep_to_label;
  for (int p : order) {
    const int rep = uf.find(p);
    auto [it, inserted] = rep_to_label.try_emplace(rep, lab.count);
    if (inserted) ++lab.count;
    lab.labels[p] = it->second;
  }
  return lab;
}

Thm42Result theorem_4_2_check(const OperatorSpec& spec, double y_lo, double y_hi, int res_x,
                              int res_y, double eps) {
  if (spec.alpha) throw std::invalid_argument("theorem_4_2_check: requires alpha == 1 (leave alpha empty)");
  if (spec.m != 1) throw std::invalid_argument("theorem_4_2_check: scalar pairing (m == 1) expected");

  Thm42Result res;
  res.gamma_sample = level_set_sample(spec, {{y_lo, y_hi}}, {res_x, res_y}, eps);
  if (res.gamma_sample.size() > 0) {
    res.gamma_labels = connected_components(res.gamma_sample);
    res.gamma_components = res.gamma_labels.count;
  }

  // Domain side: components of {x : |A(x)| > eps} on the 1-D grid.
  const double hx = (spec.x_hi - spec.x_lo) / (res_x - 1);
  bool in_run = false;
  for (int i = 0; i < res_x; ++i) {
    const double x = spec.x_lo + i * hx;
    const double anorm = spec.A(x).norm();
    if (anorm > eps) {
      if (!in_run) {
        ++res.domain_components;
        in_run = true;
      }
    } else {
      res.zero_xs.push_back(x);
      in_run = false;
    }
  }

  res.equivalent = (res.gamma_components >= 2 && res.domain_components >= 2) ||
                   (res.gamma_components == 1 && res.domain_components == 1);
  return res;
}

}  // namespace nonlinlab
