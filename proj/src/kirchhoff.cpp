#include "nonlinlab/kirchhoff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nonlinlab {

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<std::pair<int, int>> pick_modes(int dim) {
  std::vector<std::pair<int, int>> all;
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= 12; ++n) all.emplace_back(m, n);
  std::sort(all.begin(), all.end(), [](auto a, auto b) {
    const int ea = a.first * a.first + a.second * a.second;
    const int eb = b.first * b.first + b.second * b.second;
    if (ea != eb) return ea < eb;
    return a < b;
  });
  all.resize(dim);
  return all;
}

Eigen::MatrixXd basis_on_grid(const std::vector<std::pair<int, int>>& modes, int N) {
  const int nodes = (N + 1) * (N + 1);
  Eigen::MatrixXd B(static_cast<int>(modes.size()), nodes);
  for (size_t k = 0; k < modes.size(); ++k) {
    const auto [m, n] = modes[k];
    const double scale = 2.0 / (kPi * std::sqrt(double(m * m + n * n)));
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) {
        const double x = double(i) / N, y = double(j) / N;
        B(static_cast<int>(k), i * (N + 1) + j) =
            scale * std::sin(m * kPi * x) * std::sin(n * kPi * y);
      }
  }
  return B;
}

Eigen::VectorXd weights_on_grid(int N) {
  const double h = 1.0 / N;
  Eigen::VectorXd w((N + 1) * (N + 1));
  for (int i = 0; i <= N; ++i) {
    const double wi = (i == 0 || i == N) ? 0.5 : 1.0;
    for (int j = 0; j <= N; ++j) {
      const double wj = (j == 0 || j == N) ? 0.5 : 1.0;
      w[i * (N + 1) + j] = wi * wj * h * h;
    }
  }
  return w;
}

}  // namespace

KirchhoffEnergy::KirchhoffEnergy(double a, double b, double nu, double p, double lambda, int dim,
                                 int quad_n)
    : a_(a), b_(b), nu_(nu), p_(p), lambda_(lambda), dim_(dim), quad_n_(quad_n) {
  if (dim < 1) throw std::invalid_argument("KirchhoffEnergy: dim >= 1");
  if (!(b > 0.0) || a < 0.0) throw std::invalid_argument("KirchhoffEnergy: need a >= 0, b > 0");
  if (!(p > 0.0)) throw std::invalid_argument("KirchhoffEnergy: need p > 0");
  if (quad_n < 8) throw std::invalid_argument("KirchhoffEnergy: quad_n >= 8");
  modes_ = pick_modes(dim);
  basis_ = basis_on_grid(modes_, quad_n_);
  weights_ = weights_on_grid(quad_n_);
  vstar_ = Eigen::VectorXd::Zero(weights_.size());
}

void KirchhoffEnergy::set_vstar_coeffs(const Eigen::VectorXd& coeffs) {
  if (coeffs.size() != dim_) throw std::invalid_argument("vstar coefficient size mismatch");
  vstar_coeffs_ = coeffs;
  vstar_from_coeffs_ = true;
  vstar_field_ = nullptr;
  vstar_ = basis_.transpose() * coeffs;
}

void KirchhoffEnergy::set_vstar_field(const std::function<double(double, double)>& f) {
  vstar_field_ = f;
  vstar_from_coeffs_ = false;
  const int N = quad_n_;
  vstar_.resize((N + 1) * (N + 1));
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) vstar_[i * (N + 1) + j] = f(double(i) / N, double(j) / N);
}

double KirchhoffEnergy::gram_orthonormality_error() const {
  // Analytic gradients of each mode sampled on the quadrature grid.
  const int N = quad_n_;
  const int nodes = (N + 1) * (N + 1);
  Eigen::MatrixXd Gx(dim_, nodes), Gy(dim_, nodes);
  for (int k = 0; k < dim_; ++k) {
    const auto [m, n] = modes_[k];
    const double scale = 2.0 / (kPi * std::sqrt(double(m * m + n * n)));
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) {
        const double x = double(i) / N, y = double(j) / N;
        Gx(k, i * (N + 1) + j) = scale * m * kPi * std::cos(m * kPi * x) * std::sin(n * kPi * y);
        Gy(k, i * (N + 1) + j) = scale * n * kPi * std::sin(m * kPi * x) * std::cos(n * kPi * y);
      }
  }
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      double g = 0.0;
      for (int q = 0; q < nodes; ++q) g += weights_[q] * (Gx(i, q) * Gx(j, q) + Gy(i, q) * Gy(j, q));
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

double KirchhoffEnergy::value_on_grid(const Eigen::VectorXd& coeffs, const Eigen::MatrixXd& basis,
                                      const Eigen::VectorXd& weights,
                                      const Eigen::VectorXd& vstar) const {
  const Eigen::VectorXd u = basis.transpose() * coeffs;
  const double norm2 = coeffs.squaredNorm();
  double local = 0.0, track = 0.0;
  for (int q = 0; q < u.size(); ++q) {
    local += weights[q] * std::pow(std::abs(u[q]), p_ + 1.0);
    const double d = u[q] - vstar[q];
    track += weights[q] * d * d;
  }
  return 0.5 * a_ * norm2 + 0.25 * b_ * norm2 * norm2 - nu_ / (p_ + 1.0) * local -
         0.5 * lambda_ * track;
}

KirchhoffEnergy::Eval KirchhoffEnergy::evaluate(const Eigen::VectorXd& coeffs) const {
  if (coeffs.size() != dim_) throw std::invalid_argument("coefficient size mismatch");
  Eval out;
  out.value = value_on_grid(coeffs, basis_, weights_, vstar_);

  const Eigen::VectorXd u = basis_.transpose() * coeffs;
  const double norm2 = coeffs.squaredNorm();
  Eigen::VectorXd gloc = Eigen::VectorXd::Zero(dim_);
  Eigen::VectorXd gtrack = Eigen::VectorXd::Zero(dim_);
  for (int q = 0; q < u.size(); ++q) {
    const double au = std::abs(u[q]);
    const double s = au > 0.0 ? std::pow(au, p_ - 1.0) * u[q] : 0.0;  // |u|^{p-1} u
    const double wq = weights_[q];
    const double d = u[q] - vstar_[q];
    for (int k = 0; k < dim_; ++k) {
      gloc[k] += wq * s * basis_(k, q);
      gtrack[k] += wq * d * basis_(k, q);
    }
  }
  out.gradient = (a_ + b_ * norm2) * coeffs - nu_ * gloc - lambda_ * gtrack;

  // Heuristic resolution gate: |u|^{p+1} oscillates ~ (p+1) times faster
  // than the highest basis mode.
  int max_freq = 1;
  for (auto [m, n] : modes_) max_freq = std::max({max_freq, m, n});
  out.quad_warning = (p_ + 1.0) * max_freq > quad_n_;
  out.refined_value = out.value;
  if (out.quad_warning) {
    const int N2 = 2 * quad_n_;
    const Eigen::MatrixXd basis2 = basis_on_grid(modes_, N2);
    const Eigen::VectorXd weights2 = weights_on_grid(N2);
    Eigen::VectorXd vstar2 = Eigen::VectorXd::Zero(weights2.size());
    if (vstar_from_coeffs_) vstar2 = basis2.transpose() * vstar_coeffs_;
    else if (vstar_field_) {
      for (int i = 0; i <= N2; ++i)
        for (int j = 0; j <= N2; ++j)
          vstar2[i * (N2 + 1) + j] = vstar_field_(double(i) / N2, double(j) / N2);
    }
    out.refined_value = value_on_grid(coeffs, basis2, weights2, vstar2);
  }
  return out;
}

std::vector<std::pair<double, double>> KirchhoffEnergy::ray_probe(
    const Eigen::VectorXd& direction, const std::vector<double>& ts) const {
  std::vector<std::pair<double, double>> out;
  out.reserve(ts.size());
  for (double t : ts) out.emplace_back(t, evaluate(t * direction).value);
  return out;
}

}  // namespace nonlinlab
