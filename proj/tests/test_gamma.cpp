#include <doctest.h>

#include <cmath>
#include <random>

#include "nonlinlab/gamma_three.hpp"

using namespace nonlinlab;

TEST_CASE("g_eval: branch values at x0 = 3") {
  const ExtremalG p{3.0, 1.0};
  CHECK(g_eval(p, 1.0).first == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(g_eval(p, 3.0).first == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(g_eval(p, 4.0).first == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  CHECK(g_eval(p, 3.0).second == doctest::Approx(1.0).epsilon(1e-14));  // x0/3
  CHECK(g_eval(p, 0.0).first == 0.0);
  CHECK(g_eval(p, 0.0).second == 0.0);
}

TEST_CASE("g_eval: C1 gluing at the breakpoints") {
  for (double x0 : {1.0, 3.0, 10.0}) {
    const ExtremalG p{x0, 1.0};
    for (int bp = 0; bp < 2; ++bp) {
      const double x = bp == 0 ? x0 / 3.0 : x0;
      const auto left = g_eval_branch(p, bp, x);
      const auto right = g_eval_branch(p, bp + 1, x);
      CHECK(std::abs(left.first - right.first) <= 1e-14);
      CHECK(std::abs(left.second - right.second) <= 1e-13);
    }
    CHECK(std::abs(g_eval(p, 4.0 * x0 / 3.0).first) <= 1e-13);
  }
}

TEST_CASE("g': Lipschitz constant is exactly 1") {
  const ExtremalG p{3.0, 1.0};
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(-15.0, 15.0);
  double lip = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double x = U(rng), y = U(rng);
    if (x == y) continue;
    lip = std::max(lip, std::abs(g_eval(p, x).second - g_eval(p, y).second) / std::abs(x - y));
  }
  CHECK(std::abs(lip - 1.0) <= 1e-6);
}

TEST_CASE("certificates: scaled members pass, the class boundary is rejected") {
  const AdmissibleScalar good = AdmissibleScalar::from_extremal({3.0, 1.1});
  const CertificateResult ok = certify(good, -50.0, 50.0);
  CHECK(ok.ok);
  CHECK(ok.max_I <= 1e-12);
  CHECK(ok.max_lip_quotient <= 1.0 / 1.1 + 1e-9);

  const AdmissibleScalar boundary = AdmissibleScalar::from_extremal({3.0, 1.0});
  const CertificateResult rejected = certify(boundary, -50.0, 50.0);
  CHECK(!rejected.ok);

  // any admissible member integrates its derivative to a nonpositive value
  CHECK(good.I(4.0 * 3.0 / 3.0) <= 1e-12);
}

TEST_CASE("fixed_point_scan: witness root at lambda = 3 mu sits at x0") {
  const AdmissibleScalar m = AdmissibleScalar::from_extremal({3.0, 1.1});
  const auto roots = fixed_point_scan(m, 3.3, -50.0, 50.0, 4001);
  bool found = false;
  for (double x : roots)
    if (std::abs(x - 3.0) <= 1e-8) found = true;
  CHECK(found);
  CHECK(roots.front() <= 0.0);  // contains 0
  bool zero = false;
  for (double x : roots) zero = zero || x == 0.0;
  CHECK(zero);
}

TEST_CASE("fixed_point_scan: no nonzero root below the threshold") {
  const AdmissibleScalar m = AdmissibleScalar::from_extremal({3.0, 1.1});
  const auto roots = fixed_point_scan(m, 2.9, -100.0, 100.0, 4001);
  for (double x : roots) CHECK(std::abs(x) <= 1e-9 * 101.0);
}

TEST_CASE("fixed_point_scan: pure quadratic maximum has only the trivial root") {
  AdmissibleScalar m;
  const double L = 0.8;
  m.I = [L](double x) { return -0.5 * L * x * x; };
  m.dI = [L](double x) { return -L * x; };
  m.lipschitz = L;
  m.label = "quadratic";
  for (double lam : {0.5, 1.5, 3.0}) {
    const auto roots = fixed_point_scan(m, lam, -100.0, 100.0, 1001);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == 0.0);
  }
}

TEST_CASE("fixed_point_scan: branch roots above 3 mu are simple") {
  const AdmissibleScalar m = AdmissibleScalar::from_extremal({3.0, 1.1});
  const double lam = 3.5 * 1.1;  // above the tangency
  const auto roots = fixed_point_scan(m, lam, -50.0, 50.0, 4001);
  std::vector<double> nonzero;
  for (double x : roots)
    if (std::abs(x) > 1e-6) nonzero.push_back(x);
  CHECK(nonzero.size() == 2);  // the tangency splits into a simple pair
  auto r = [&](double x) { return x - lam * m.dI(x); };
  for (double x : nonzero) {
    const double h = 1e-6;
    CHECK(r(x - h) * r(x + h) < 0.0);  // sign change certifies simplicity
  }
}

TEST_CASE("verify_gamma_three: family report") {
  std::vector<AdmissibleScalar> family;
  for (double x0 : {1.0, 3.0, 10.0})
    for (double mu : {1.01, 1.1, 2.0}) family.push_back(AdmissibleScalar::from_extremal({x0, mu}));
  const std::vector<double> lambdas{0.5, 1.0, 2.0, 2.9, 3.0};
  const GammaReport rep = verify_gamma_three(family, lambdas, -50.0, 50.0, 4001);
  CHECK(rep.lower_bound_ok);
  CHECK(rep.upper_bound_ok);
  CHECK(!rep.vacuous);

  const GammaReport empty = verify_gamma_three({}, lambdas, -50.0, 50.0);
  CHECK(empty.vacuous);
  CHECK(!empty.notes.empty());

  std::vector<AdmissibleScalar> with_adversary = family;
  with_adversary.push_back(AdmissibleScalar::from_extremal({2.0, 1.0}));  // L = 1 exactly
  const GammaReport rep2 = verify_gamma_three(with_adversary, lambdas, -50.0, 50.0, 2001);
  int rejected = 0;
  for (const auto& row : rep2.rows)
    if (!row.certified) ++rejected;
  CHECK(rejected == 1);
}
