#include "nonlinlab/gamma_three.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nonlinlab {

std::pair<double, double> g_eval_branch(const ExtremalG& p, int branch, double x) {
  const double x0 = p.x0;
  switch (branch) {
    case 0:
      return {-0.5 * x * x, -x};
    case 1: {
      // Anchor at whichever end of the middle parabola is nearer; the
      // expanded coefficients cancel at scale x0^2 and lose digits.
      if (x < 2.0 * x0 / 3.0) {
        const double d = x - 2.0 * x0 / 3.0;  // vertex form
        return {0.5 * d * d - x0 * x0 / 9.0, d};
      }
      const double e = x - x0;
      return {0.5 * e * e + (x0 / 3.0) * e - x0 * x0 / 18.0, e + x0 / 3.0};
    }
    default: {
      if (x < 7.0 * x0 / 6.0) {
        const double e = x - x0;
        return {-0.5 * e * e + (x0 / 3.0) * e - x0 * x0 / 18.0, -e + x0 / 3.0};
      }
      const double d = x - 4.0 * x0 / 3.0;  // vertex form, exact zero at 4 x0/3
      return {-0.5 * d * d, -d};
    }
  }
}

std::pair<double, double> g_eval(const ExtremalG& p, double x) {
  const double x0 = p.x0;
  if (x < x0 / 3.0) return g_eval_branch(p, 0, x);
  if (x <= x0) return g_eval_branch(p, 1, x);
  return g_eval_branch(p, 2, x);
}

AdmissibleScalar AdmissibleScalar::from_extremal(const ExtremalG& params) {
  AdmissibleScalar m;
  m.I = [params](double x) { return g_eval(params, x).first / params.mu; };
  m.dI = [params](double x) { return g_eval(params, x).second / params.mu; };
  m.lipschitz = 1.0 / params.mu;
  std::ostringstream lbl;
  lbl << "extremal(x0=" << params.x0 << ",mu=" << params.mu << ")";
  m.label = lbl.str();
  m.extremal = params;
  return m;
}

CertificateResult certify(const AdmissibleScalar& member, double x_lo, double x_hi, int samples) {
  CertificateResult cert;
  if (!(member.lipschitz < 1.0)) {
    cert.ok = false;
    cert.reason = "claimed Lipschitz constant must be < 1";
    return cert;
  }
  if (std::abs(member.I(0.0)) > 1e-12) {
    cert.ok = false;
    cert.reason = "I(0) != 0";
    return cert;
  }
  cert.max_I = -std::numeric_limits<double>::infinity();
  double prev_x = x_lo, prev_d = member.dI(x_lo);
  for (int k = 0; k < samples; ++k) {
    const double x = x_lo + (x_hi - x_lo) * k / (samples - 1);
    cert.max_I = std::max(cert.max_I, member.I(x));
    const double d = member.dI(x);
    if (k > 0 && x != prev_x)
      cert.max_lip_quotient = std::max(cert.max_lip_quotient, std::abs(d - prev_d) / (x - prev_x));
    prev_x = x;
    prev_d = d;
  }
  if (cert.max_I > 1e-12) {
    cert.ok = false;
    cert.reason = "sampled I exceeds 0 (0 is not a global maximum)";
    return cert;
  }
  if (cert.max_lip_quotient > member.lipschitz + 1e-9) {
    cert.ok = false;
    cert.reason = "sampled Lipschitz quotient exceeds the claimed constant";
    return cert;
  }
  return cert;
}

namespace {

double refine_bisection(const std::function<double(double)>& r, double lo, double hi, double flo) {
  for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = r(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) hi = mid;
    else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// Ternary search for the minimum of |r| on [lo, hi]; valid near an isolated
// tangential root where |r| is unimodal.
double refine_ternary(const std::function<double(double)>& r, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (std::abs(r(m1)) <= std::abs(r(m2))) hi = m2;
    else lo = m1;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> fixed_point_scan(const AdmissibleScalar& member, double lambda, double x_lo,
                                     double x_hi, int samples) {
  if (!(lambda > 0.0)) throw std::invalid_argument("fixed_point_scan: lambda must be > 0");
  if (samples < 3) throw std::invalid_argument("fixed_point_scan: samples must be >= 3");
  if (std::abs(member.dI(0.0)) > 1e-12)
    throw std::invalid_argument("fixed_point_scan: I'(0) != 0, 0 is not a stationary point");

  auto r = [&](double x) { return x - lambda * member.dI(x); };

  std::vector<double> xs(samples), rs(samples);
  for (int k = 0; k < samples; ++k) {
    xs[k] = x_lo + (x_hi - x_lo) * k / (samples - 1);
    rs[k] = r(xs[k]);
  }

  std::vector<double> roots{0.0};
  for (int k = 0; k < samples; ++k)
    if (rs[k] == 0.0) roots.push_back(xs[k]);

  for (int k = 0; k + 1 < samples; ++k) {
    if (rs[k] == 0.0 || rs[k + 1] == 0.0) continue;
    if (rs[k] * rs[k + 1] < 0.0) roots.push_back(refine_bisection(r, xs[k], xs[k + 1], rs[k]));
  }

  // Tangential roots touch zero without a sign change; chase interior local
  // minima of |r| and accept only machine-level residuals.
  for (int k = 1; k + 1 < samples; ++k) {
    if (std::abs(rs[k]) < std::abs(rs[k - 1]) && std::abs(rs[k]) <= std::abs(rs[k + 1]) &&
        rs[k] != 0.0 && rs[k - 1] * rs[k] > 0.0 && rs[k] * rs[k + 1] > 0.0) {
      const double x_hat = refine_ternary(r, xs[k - 1], xs[k + 1]);
      if (std::abs(r(x_hat)) <= 1e-9 * (1.0 + std::abs(x_hat))) roots.push_back(x_hat);
    }
  }

  std::sort(roots.begin(), roots.end());
  const double scale = 1.0 + std::max(std::abs(x_lo), std::abs(x_hi));
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double a, double b) { return std::abs(a - b) <= 1e-9 * scale; }),
              roots.end());
  return roots;
}

GammaReport verify_gamma_three(const std::vector<AdmissibleScalar>& family,
                               std::span<const double> lambda_grid, double x_lo, double x_hi,
                               int samples) {
  GammaReport report;
  if (family.empty()) {
    report.vacuous = true;
    report.notes.push_back("empty family: vacuous pass");
    return report;
  }

  const double nz = 1e-9 * (1.0 + std::max(std::abs(x_lo), std::abs(x_hi)));
  for (const AdmissibleScalar& member : family) {
    const CertificateResult cert = certify(member, x_lo, x_hi);
    if (!cert.ok) {
      GammaMemberRow row;
      row.label = member.label;
      row.certified = false;
      row.reject_reason = cert.reason;
      report.rows.push_back(std::move(row));
      continue;
    }
    for (double lambda : lambda_grid) {
      GammaMemberRow row;
      row.label = member.label;
      row.lambda = lambda;
      row.roots = fixed_point_scan(member, lambda, x_lo, x_hi, samples);
      for (double x : row.roots)
        if (std::abs(x) > nz) row.nonzero_roots.push_back(x);
      if (lambda <= 3.0 && !row.nonzero_roots.empty()) report.lower_bound_ok = false;
      report.rows.push_back(std::move(row));
    }
    if (member.extremal) {
      // Witness root of the scaled family at lambda = 3 mu, expected at x0.
      GammaMemberRow row;
      row.label = member.label + " @3mu";
      row.lambda = 3.0 * member.extremal->mu;
      row.roots = fixed_point_scan(member, row.lambda, x_lo, x_hi, samples);
      bool found = false;
      for (double x : row.roots)
        if (std::abs(x) > nz) {
          row.nonzero_roots.push_back(x);
          if (std::abs(x - member.extremal->x0) <= 1e-7 * (1.0 + member.extremal->x0)) found = true;
        }
      if (!found) report.upper_bound_ok = false;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace nonlinlab
