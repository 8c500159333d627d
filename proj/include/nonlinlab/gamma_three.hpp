#ifndef NONLINLAB_GAMMA_THREE_HPP
#define NONLINLAB_GAMMA_THREE_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nonlinlab {

/// Three-branch C^1 extremal function with breakpoints at x0/3 and x0:
///   g(x) = -x^2/2                              for x <  x0/3
///   g(x) =  x^2/2 - 2 x0 x / 3 + x0^2/9        for x0/3 <= x <= x0
///   g(x) = -x^2/2 + 4 x0 x / 3 - 8 x0^2/9      for x >  x0
/// g <= 0 with g(0) = 0, g' is 1-Lipschitz, g'(x0) = x0/3, g(4 x0/3) = 0.
/// Scaling by 1/mu (mu > 1) brings the derivative's Lipschitz constant
/// strictly below 1.
struct ExtremalG {
  double x0 = 1.0;
  double mu = 1.0;
};

/// (g(x), g'(x)) of the unscaled three-branch function.
std::pair<double, double> g_eval(const ExtremalG& params, double x);

/// One branch formula (0, 1, 2 from the left) evaluated anywhere; the
/// one-sided limits at a breakpoint are the adjacent branches evaluated at
/// that point.
std::pair<double, double> g_eval_branch(const ExtremalG& params, int branch, double x);

/// Scalar functional with 0 as global maximum, I <= 0, and a derivative
/// with Lipschitz constant < 1; membership is certified by sampling.
struct AdmissibleScalar {
  std::function<double(double)> I;
  std::function<double(double)> dI;
  double lipschitz = 0.0;  // claimed constant, must be < 1
  std::string label;
  std::optional<ExtremalG> extremal;  // set for the g/mu family

  static AdmissibleScalar from_extremal(const ExtremalG& params);
};

struct CertificateResult {
  bool ok = true;
  std::string reason;
  double max_I = 0.0;            // sampled sup of I (must be <= 1e-12)
  double max_lip_quotient = 0.0; // sampled |dI(x)-dI(y)|/|x-y|
};

CertificateResult certify(const AdmissibleScalar& member, double x_lo, double x_hi,
                          int samples = 10000);

/// All solutions of x = lambda I'(x) in [x_lo, x_hi]: sign-change bisection
/// to 1e-12 plus a tangential-root pass that refines local minima of
/// |x - lambda I'(x)| (the upper-bound witness root is a kink tangency).
/// Always contains 0; I'(0) = 0 is checked.
std::vector<double> fixed_point_scan(const AdmissibleScalar& member, double lambda, double x_lo,
                                     double x_hi, int samples);

struct GammaMemberRow {
  std::string label;
  double lambda = 0.0;
  std::vector<double> roots;
  std::vector<double> nonzero_roots;
  bool certified = true;
  std::string reject_reason;
};

struct GammaReport {
  std::vector<GammaMemberRow> rows;
  bool lower_bound_ok = true;   // no nonzero fixed point at any lambda <= 3
  bool upper_bound_ok = true;   // extremal members witness a root at lambda = 3 mu
  bool vacuous = false;
  std::vector<std::string> notes;
};

/// Lower-bound evidence (no nonzero fixed points for lambda <= 3 across the
/// certified family) plus the upper-bound witnesses (nonzero fixed point of
/// each extremal member at lambda = 3 mu, located at x = x0).
GammaReport verify_gamma_three(const std::vector<AdmissibleScalar>& family,
                               std::span<const double> lambda_grid, double x_lo, double x_hi,
                               int samples = 4001);

}  // namespace nonlinlab

#endif
