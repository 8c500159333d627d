#include <doctest.h>

#include <cmath>

#include "nonlinlab/connectivity.hpp"

using namespace nonlinlab;

namespace {

OperatorSpec scalar_spec(const std::function<double(double)>& f) {
  OperatorSpec spec;
  spec.x_lo = -1.0;
  spec.x_hi = 1.0;
  spec.m = 1;
  spec.A = [f](double x) {
    Eigen::VectorXd v(1);
    v[0] = f(x);
    return v;
  };
  return spec;
}

}  // namespace

TEST_CASE("connected_components: separation and chains") {
  SampledSet set;
  set.dim = 2;
  set.radius = 0.1;
  // two clusters 10 radii apart
  for (int k = 0; k < 5; ++k) {
    set.coords.push_back(0.01 * k);
    set.coords.push_back(0.0);
    set.coords.push_back(1.0 + 0.01 * k);
    set.coords.push_back(0.0);
  }
  const ComponentLabeling two = connected_components(set);
  CHECK(two.count == 2);
  // labels are deterministic: lexicographically first cluster gets 0
  CHECK(two.labels[0] == 0);

  SampledSet chain;
  chain.dim = 2;
  chain.radius = 0.15;
  for (int k = 0; k < 50; ++k) {
    chain.coords.push_back(0.1 * k);
    chain.coords.push_back(0.0);
  }
  CHECK(connected_components(chain).count == 1);
  CHECK_THROWS_AS(connected_components(SampledSet{}), std::invalid_argument);
}

TEST_CASE("level_set_sample: hyperbola has two stable branches") {
  const OperatorSpec spec = scalar_spec([](double x) { return x; });
  const double h = 1.0 / 128.0;
  auto res = [&](double lo, double hi) {
    return static_cast<int>(std::lround((hi - lo) / h)) + 1;
  };
  const SampledSet base = level_set_sample(spec, {{-10.0, 10.0}}, {res(-1, 1), res(-10, 10)}, 0.12);
  CHECK(!base.empty_warning);
  CHECK(connected_components(base).count == 2);

  // doubling the box at fixed spacing preserves both branches
  const SampledSet wide = level_set_sample(spec, {{-20.0, 20.0}}, {res(-1, 1), res(-20, 20)}, 0.12);
  CHECK(connected_components(wide).count == 2);
}

TEST_CASE("level_set_sample: constant operator gives one line") {
  const OperatorSpec spec = scalar_spec([](double) { return 1.0; });
  const SampledSet line = level_set_sample(spec, {{-10.0, 10.0}}, {257, 2561}, 0.05);
  CHECK(connected_components(line).count == 1);
}

TEST_CASE("level_set_sample: alpha = x^2 samples a connected cross") {
  OperatorSpec spec = scalar_spec([](double x) { return x; });
  spec.alpha = [](double x) { return x * x; };
  const SampledSet cross = level_set_sample(spec, {{-2.0, 2.0}}, {257, 513}, 0.05);
  CHECK(connected_components(cross).count == 1);
  CHECK(cross.size() > 500);  // the whole zero fiber {x=0} is captured
}

TEST_CASE("level_set_sample validates arguments") {
  const OperatorSpec spec = scalar_spec([](double x) { return x; });
  CHECK_THROWS_AS(level_set_sample(spec, {{-1.0, 1.0}}, {16, 16}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(level_set_sample(spec, {{-1.0, 1.0}}, {8, 16}, 0.1), std::invalid_argument);
}

TEST_CASE("level_set_sample: unreachable level sets warn") {
  // A(x) y = 1 has no solutions with |y| <= 0.4 on |x| <= 1
  const OperatorSpec spec = scalar_spec([](double x) { return x; });
  const SampledSet empty = level_set_sample(spec, {{-0.4, 0.4}}, {64, 64}, 0.01);
  CHECK(empty.size() == 0);
  CHECK(empty.empty_warning);
}

TEST_CASE("theorem_4_2_check: three instances") {
  const double h = 1.0 / 128.0;
  const int rx = 257;
  auto ry = [&](double half) { return static_cast<int>(std::lround(2.0 * half / h)) + 1; };

  const Thm42Result identity =
      theorem_4_2_check(scalar_spec([](double x) { return x; }), -10, 10, rx, ry(10), 0.12);
  CHECK(identity.gamma_components == 2);
  CHECK(identity.domain_components == 2);
  CHECK(identity.equivalent);
  CHECK(!identity.zero_xs.empty());

  const Thm42Result constant =
      theorem_4_2_check(scalar_spec([](double) { return 1.0; }), -10, 10, rx, ry(10), 0.05);
  CHECK(constant.gamma_components == 1);
  CHECK(constant.domain_components == 1);
  CHECK(constant.equivalent);
  CHECK(constant.zero_xs.empty());

  const Thm42Result nozeros = theorem_4_2_check(
      scalar_spec([](double x) { return x * x + 0.1; }), -10, 10, rx, ry(10), 0.05);
  CHECK(nozeros.gamma_components == 1);
  CHECK(nozeros.domain_components == 1);
  CHECK(nozeros.equivalent);
}

TEST_CASE("theorem_4_2_check: stability under refinement") {
  const Thm42Result coarse =
      theorem_4_2_check(scalar_spec([](double x) { return x; }), -10, 10, 257, 2561, 0.12);
  const Thm42Result fine =
      theorem_4_2_check(scalar_spec([](double x) { return x; }), -10, 10, 513, 5121, 0.12);
  CHECK(coarse.gamma_components == fine.gamma_components);
  CHECK(coarse.domain_components == fine.domain_components);
}

TEST_CASE("theorem_4_2_check requires the unit level") {
  OperatorSpec spec = scalar_spec([](double x) { return x; });
  spec.alpha = [](double) { return 1.0; };  // explicit alpha, even if constant
  CHECK_THROWS_AS(theorem_4_2_check(spec, -10, 10, 64, 64, 0.1), std::invalid_argument);
}

TEST_CASE("component labels are deterministic across runs") {
  const OperatorSpec spec = scalar_spec([](double x) { return x; });
  const SampledSet s1 = level_set_sample(spec, {{-10.0, 10.0}}, {257, 2561}, 0.12);
  const SampledSet s2 = level_set_sample(spec, {{-10.0, 10.0}}, {257, 2561}, 0.12);
  const ComponentLabeling l1 = connected_components(s1);
  const ComponentLabeling l2 = connected_components(s2);
  CHECK(l1.count == l2.count);
  CHECK(l1.labels == l2.labels);
}
