// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/numeric.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "ew/errors.hpp"

using namespace ew;

TEST_SUITE_BEGIN("numeric");

TEST_CASE("kahan sum recovers a mean the naive sum loses") {
  // 1e8 + many tiny terms; compensated summation keeps every contribution.
  std::vector<double> xs(10001, 1e-8);
  xs[0] = 1e8;
  const double s = numeric::kahan_sum(xs.data(), xs.size());
  CHECK(s == doctest::Approx(1e8 + 1e-4).epsilon(1e-15));
}

TEST_CASE("harmonic numbers: exact values and the crossover") {
  CHECK(numeric::harmonic(1) == 1.0);
  CHECK(numeric::harmonic(2) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(numeric::harmonic(10) ==
        doctest::Approx(7381.0 / 2520.0).epsilon(1e-15));
  // Continuity across the exact/asymptotic switch at 1e4.
  const double below = numeric::harmonic(10000);
  double above = numeric::harmonic(10001);
  CHECK(above - below == doctest::Approx(1.0 / 10001.0).epsilon(1e-9));
  // Large-n spot value against the asymptotic expansion done by hand:
  // H_n ~ ln n + gamma + 1/(2n) - ...
  const double h = numeric::harmonic(1000000);
  CHECK(h == doctest::Approx(std::log(1e6) + 0.57721566490153286 + 5e-7)
                 .epsilon(1e-12));
  CHECK_THROWS_AS((void)numeric::harmonic(0), OutOfDomain);
}

TEST_CASE("mean_var matches closed forms") {
  std::vector<double> xs = {1.0, 2.0, 3.0, 4.0, 5.0};
  const auto mv = numeric::mean_var(xs.data(), xs.size());
  CHECK(mv.mean == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(mv.var == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("quantiles interpolate linearly") {
  std::vector<double> xs = {0.0, 1.0, 2.0, 3.0, 4.0};
  CHECK(numeric::quantile_sorted(xs, 0.0) == 0.0);
  CHECK(numeric::quantile_sorted(xs, 1.0) == 4.0);
  CHECK(numeric::quantile_sorted(xs, 0.5) == 2.0);
  CHECK(numeric::quantile_sorted(xs, 0.25) == doctest::Approx(1.0));
  CHECK(numeric::quantile_sorted(xs, 0.1) == doctest::Approx(0.4));
  CHECK_THROWS_AS((void)numeric::quantile_sorted(xs, 1.5), OutOfDomain);
}

TEST_CASE("ols recovers an exact line and flags degenerate input") {
  std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
  std::vector<double> y = {3.0, 5.0, 7.0, 9.0};
  const auto fit = numeric::ols(x, y);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(fit.slope_se == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)numeric::ols({1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}),
                  BadIndices);
}

TEST_CASE("quadrature reproduces analytic integrals") {
  const double pi = 3.14159265358979323846;
  CHECK(numeric::integrate([](double x) { return std::sin(x); }, 0.0, pi,
                           1e-12) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(numeric::integrate([](double x) { return x * x * x; }, 0.0, 2.0,
                           1e-12) == doctest::Approx(4.0).epsilon(1e-13));
  // Gaussian over the half line: sqrt(pi)/2.
  CHECK(numeric::integrate_to_inf(
            [](double x) { return std::exp(-x * x); }, 0.0, 1e-11) ==
        doctest::Approx(std::sqrt(pi) / 2.0).epsilon(1e-10));
  // Mean of Exp(1) via the tail substitution.
  CHECK(numeric::integrate_to_inf(
            [](double x) { return x * std::exp(-x); }, 0.0, 1e-11) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS((void)numeric::integrate_to_inf(
                      [](double x) { return 1.0 / (1.0 + x); }, 0.0, 1e-10),
                  DivergentIntegral);
}

TEST_CASE("fnv1a64 matches the reference offset basis behaviour") {
  // Known property: hash of the empty string is the offset basis.
  CHECK(numeric::fnv1a64("") == 0xCBF29CE484222325ULL);
  CHECK(numeric::fnv1a64("a") != numeric::fnv1a64("b"));
}

TEST_SUITE_END();
