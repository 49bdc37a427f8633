// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
//
// Oracles here are independent of the closed forms under test: gamma_sum
// against direct summation, the moment sums against the one-step recursion
// they solve, and the limit moments against hand-frozen constants.
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ew/analytic.hpp"
#include "ew/errors.hpp"
#include "ew/laws.hpp"

namespace {

using ew::analytic::asymptotic_mean_constant;
using ew::analytic::atom_factorization_check;
using ew::analytic::expected_moment_sum;
using ew::analytic::gamma_ratio;
using ew::analytic::gamma_sum;
using ew::analytic::l_moments;
using ew::analytic::limit_mean;
using ew::analytic::limit_mean_component;
using ew::analytic::ml_moment;
using ew::analytic::walk_mean;
using ew::laws::EchoLaw;
using ew::laws::SpinLaw;
using ew::laws::WalkParams;

// Direct-summation oracle for sum_{r=m}^{n} Gamma(r+a)/Gamma(r+b+1).
double gamma_sum_direct(std::int64_t m, std::int64_t n, double a, double b) {
  double s = 0.0;
  for (std::int64_t r = m; r <= n; ++r) {
    const double rd = static_cast<double>(r);
    s += std::exp(std::lgamma(rd + a) - std::lgamma(rd + b + 1.0));
  }
  return s;
}

// One-step recursion oracle for the absolute-moment sum T_q(n), already a
// prefix sum over steps 1..n:
//   T_q(1) = E|X|^q,  T_q(n+1) = (1-p) E|X|^q + ((n + p m_q) / n) T_q(n).
std::vector<double> moment_sum_recursion(const WalkParams& params, double q,
                                         std::int64_t n) {
  const double mq = params.echo.moment(q);
  const double exq = params.spin.abs_moment(q);
  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(n));
  t.push_back(exq);
  for (std::int64_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    t.push_back((1.0 - params.p) * exq +
                ((kd + params.p * mq) / kd) * t.back());
  }
  return t;
}

// Signed counterpart for the mean of the echoed prefix sum.
std::vector<double> walk_mean_recursion(const WalkParams& params,
                                        std::int64_t n) {
  const double m1 = params.echo.moment(1.0);
  const double ex = params.spin.mean();
  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(n));
  t.push_back(ex);
  for (std::int64_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    t.push_back((1.0 - params.p) * ex +
                ((kd + params.p * m1) / kd) * t.back());
  }
  return t;
}

}  // namespace

TEST_SUITE_BEGIN("analytic");

TEST_CASE("gamma_sum matches direct summation") {
  // Telescoping identity example: sum_{r=1}^{1} Gamma(r)/Gamma(r+2) = 1/2.
  CHECK(gamma_sum(1, 1, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));

  const double params[][2] = {{0.0, 1.0},   {0.3, 0.9},  {1.6, 0.0},
                              {-0.4, 0.7},  {2.0, 0.25}, {0.5, 3.5}};
  const std::int64_t ranges[][2] = {{1, 1}, {1, 7}, {3, 40}, {10, 123}};
  for (const auto& ab : params) {
    for (const auto& mn : ranges) {
      const double got = gamma_sum(mn[0], mn[1], ab[0], ab[1]);
      const double want = gamma_sum_direct(mn[0], mn[1], ab[0], ab[1]);
      CAPTURE(ab[0]);
      CAPTURE(ab[1]);
      CAPTURE(mn[0]);
      CAPTURE(mn[1]);
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("gamma_sum rejects bad input") {
  CHECK_THROWS_AS(gamma_sum(0, 5, 0.0, 1.0), ew::BadIndices);
  CHECK_THROWS_AS(gamma_sum(6, 5, 0.0, 1.0), ew::BadIndices);
  CHECK_THROWS_AS(gamma_sum(1, 5, 0.7, 0.7), ew::EqualParameters);
}

TEST_CASE("gamma_ratio has the n^{a-b} asymptote") {
  // Gamma(n+a)/Gamma(n+b) ~ n^{a-b}; at n = 1e6 the relative error of the
  // first-order asymptote is below 1e-5.
  const double cases[][2] = {{0.3, 0.9}, {1.6, 0.0}};
  for (const auto& ab : cases) {
    const double n = 1e6;
    const double ratio = gamma_ratio(n, ab[0], ab[1]);
    const double asym = std::pow(n, ab[0] - ab[1]);
    CHECK(std::abs(ratio / asym - 1.0) < 1e-5);
  }
}

TEST_CASE("expected_moment_sum solves its one-step recursion") {
  struct Case {
    WalkParams params;
    double q;
  };
  const Case cases[] = {
      {{1.0, EchoLaw::constant(2.0), SpinLaw::constant(1.0)}, 1.0},
      {{1.0, EchoLaw::constant(2.0), SpinLaw::constant(1.0)}, 2.0},
      {{0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)}, 1.0},
      {{0.5, EchoLaw::constant(2.0), SpinLaw::constant(1.0)}, 1.0},  // p m_q = 1
      {{0.5, EchoLaw::constant(1.0), SpinLaw::rademacher()}, 1.0},
      {{0.5, EchoLaw::bernoulli(0.5), SpinLaw::normal(0.0, 1.0)}, 2.0},
      {{0.25, EchoLaw::constant(2.0), SpinLaw::constant(1.0)}, 2.0},  // p m_q = 1
      {{0.7, EchoLaw::exponential(1.0), SpinLaw::uniform(-1.0, 2.0)}, 1.5},
      {{0.9, EchoLaw::discrete({1.0, 3.0}, {0.5, 0.5}), SpinLaw::exponential(2.0)},
       1.0},
  };
  for (const auto& c : cases) {
    const auto oracle = moment_sum_recursion(c.params, c.q, 300);
    CAPTURE(c.params.p);
    CAPTURE(c.q);
    for (std::int64_t n = 1; n <= 300; ++n) {
      const double got = expected_moment_sum(c.params, c.q, n);
      CHECK(got == doctest::Approx(oracle[static_cast<std::size_t>(n - 1)])
                       .epsilon(1e-10));
    }
  }
}

TEST_CASE("expected_moment_sum pinned values") {
  // Pure echo with factor 2: per-step means are 1, 2, 3, ..., so the sums
  // are the triangular numbers.
  const WalkParams params{1.0, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
  CHECK(expected_moment_sum(params, 1.0, 2) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(expected_moment_sum(params, 1.0, 3) == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(expected_moment_sum(params, 1.0, 4) == doctest::Approx(10.0).epsilon(1e-13));
}

TEST_CASE("expected_moment_sum domain errors") {
  const WalkParams params{0.8, EchoLaw::exponential(1.0), SpinLaw::constant(1.0)};
  CHECK_THROWS_AS(expected_moment_sum(params, 1.0, 0), ew::BadIndices);
  // E[xi^{-1}] diverges for the exponential law, so the order is rejected.
  CHECK_THROWS_AS(expected_moment_sum(params, -1.0, 10), ew::OutOfMomentDomain);
}

TEST_CASE("walk_mean solves the signed recursion") {
  const WalkParams cases[] = {
      {1.0, EchoLaw::constant(2.0), SpinLaw::constant(1.0)},
      {0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)},
      {0.5, EchoLaw::constant(1.0), SpinLaw::uniform(-1.0, 2.0)},
      {0.5, EchoLaw::constant(2.0), SpinLaw::exponential(1.0)},  // critical
      {0.6, EchoLaw::bernoulli(0.5), SpinLaw::normal(0.5, 2.0)},
  };
  for (const auto& params : cases) {
    const auto oracle = walk_mean_recursion(params, 300);
    CAPTURE(params.p);
    for (std::int64_t n = 1; n <= 300; ++n) {
      CHECK(walk_mean(params, n) ==
            doctest::Approx(oracle[static_cast<std::size_t>(n - 1)])
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("walk_mean pure-echo closed form") {
  // At p = 1 the mean collapses to EX Gamma(n+m1)/((n-1)! Gamma(1+m1)).
  const WalkParams params{1.0, EchoLaw::exponential(0.5), SpinLaw::constant(2.0)};
  const double m1 = 2.0;
  for (std::int64_t n : {1, 2, 10, 100}) {
    const double nd = static_cast<double>(n);
    const double want = 2.0 *
                        std::exp(std::lgamma(nd + m1) - std::lgamma(nd)) /
                        std::tgamma(1.0 + m1);
    CHECK(walk_mean(params, n) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("asymptotic mean description") {
  {
    const auto a = asymptotic_mean_constant(
        {0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)});
    CHECK(a.exponent == doctest::Approx(1.6).epsilon(1e-14));
    // (1 + 0.2/0.6) / Gamma(2.6), frozen.
    CHECK(a.constant == doctest::Approx(0.9326457950584353).epsilon(1e-13));
    CHECK_FALSE(a.log_correction);
  }
  {
    const auto a = asymptotic_mean_constant(
        {0.5, EchoLaw::constant(1.0), SpinLaw::constant(2.0)});
    CHECK(a.exponent == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(a.constant == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_FALSE(a.log_correction);
  }
  {
    // Critical: mean ~ (1-p) EX n ln n.
    const auto a = asymptotic_mean_constant(
        {0.5, EchoLaw::constant(2.0), SpinLaw::constant(1.0)});
    CHECK(a.exponent == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(a.constant == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(a.log_correction);
  }
  {
    // Pure echo keeps exponent m1 even below 1.
    const auto a = asymptotic_mean_constant(
        {1.0, EchoLaw::uniform(0.0, 1.0), SpinLaw::constant(1.0)});
    CHECK(a.exponent == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(a.constant == doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-13));
    CHECK_FALSE(a.log_correction);
  }

  // Consistency with the exact mean at a large horizon: supercritical case.
  // The subleading linear term decays like n^{-0.6} relative to the leading
  // one, about 9e-5 at n = 2^20, so the tolerance sits just above it.
  const WalkParams sup{0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
  const auto a = asymptotic_mean_constant(sup);
  const double n = 1 << 20;
  CHECK(walk_mean(sup, 1 << 20) / std::pow(n, a.exponent) ==
        doctest::Approx(a.constant).epsilon(2e-4));
}

TEST_CASE("limit_mean on the martingale scale") {
  {
    const auto lm = limit_mean({1.0, EchoLaw::constant(2.0), SpinLaw::constant(1.0)});
    CHECK_FALSE(lm.degenerate);
    CHECK(lm.value == doctest::Approx(0.5).epsilon(1e-14));  // 1/Gamma(3)
  }
  {
    // E[xi log xi] = 3 ln 3 > 3 = m1: the limit degenerates to zero.
    const auto lm = limit_mean({1.0, EchoLaw::constant(3.0), SpinLaw::constant(1.0)});
    CHECK(lm.degenerate);
    CHECK(lm.value == 0.0);
  }
  {
    const auto lm = limit_mean({0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)});
    CHECK_FALSE(lm.degenerate);
    CHECK(lm.value == doctest::Approx(0.9326457950584353).epsilon(1e-13));
  }
  CHECK_THROWS_AS(
      limit_mean({0.5, EchoLaw::constant(1.0), SpinLaw::constant(1.0)}),
      ew::HypothesisViolation);
}

TEST_CASE("limit_mean_component normalised weights") {
  const WalkParams params{0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
  const double pm1 = 1.6;
  // r = 1: Gamma(1)/Gamma(1+pm1), no thinning factor.
  CHECK(limit_mean_component(params, 1) ==
        doctest::Approx(1.0 / std::tgamma(1.0 + pm1)).epsilon(1e-13));
  // r = 2: factor (1-p) for the cut, Gamma(2)/Gamma(2+pm1).
  CHECK(limit_mean_component(params, 2) ==
        doctest::Approx(0.2 / std::tgamma(2.0 + pm1)).epsilon(1e-13));
  CHECK_THROWS_AS(limit_mean_component(params, 0), ew::BadIndices);
}

TEST_CASE("l_moments frozen values") {
  {
    const auto lm = l_moments(EchoLaw::bernoulli(0.5), 3);
    REQUIRE(lm.valid_k == 3);
    CHECK(lm.values[0] == doctest::Approx(1.1283791670955126).epsilon(1e-13));
    CHECK(lm.values[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(lm.values[2] == doctest::Approx(4.513516668382049).epsilon(1e-13));
  }
  {
    // General Bernoulli(q): E L^2 = 2 / Gamma(1+2q).
    for (double q : {0.2, 0.35, 0.7, 0.9}) {
      const auto lm = l_moments(EchoLaw::bernoulli(q), 2);
      REQUIRE(lm.valid_k == 2);
      CHECK(lm.values[1] ==
            doctest::Approx(2.0 / std::tgamma(1.0 + 2.0 * q)).epsilon(1e-12));
    }
  }
  {
    const auto lm = l_moments(EchoLaw::uniform(0.0, 2.0), 2);
    REQUIRE(lm.valid_k == 2);
    CHECK(lm.values[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(lm.values[1] == doctest::Approx(1.5).epsilon(1e-13));
  }
  {
    const auto lm = l_moments(EchoLaw::constant(1.0), 5);
    REQUIRE(lm.valid_k == 5);
    for (double v : lm.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    // Constant(3): second moment condition 9 < 6 fails, so only k = 1.
    const auto lm = l_moments(EchoLaw::constant(3.0), 4);
    CHECK(lm.valid_k == 1);
    CHECK(lm.requested_k == 4);
    CHECK(lm.values.size() == 1);
    CHECK(lm.values[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  }
  {
    // Constant(2): the boundary m2 = 2 m1 is excluded (strict inequality).
    const auto lm = l_moments(EchoLaw::constant(2.0), 3);
    CHECK(lm.valid_k == 1);
    CHECK(lm.values[0] == doctest::Approx(0.5).epsilon(1e-13));
  }
}

TEST_CASE("ml_moment values and domain") {
  // Gamma(1+a)/Gamma(1+qa).
  CHECK(ml_moment(0.5, 1.0) ==
        doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-13));
  CHECK(ml_moment(0.5, 2.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(ml_moment(1.0, 3.7) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ml_moment(0.25, 4.0) ==
        doctest::Approx(24.0 / std::tgamma(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(ml_moment(0.0, 1.0), ew::OutOfDomain);
  CHECK_THROWS_AS(ml_moment(1.2, 1.0), ew::OutOfDomain);
  CHECK_THROWS_AS(ml_moment(0.5, -1.0), ew::OutOfDomain);
}

TEST_CASE("atom factorization identity") {
  // Bernoulli(0.5): both sides reduce to Gamma(1+k)/Gamma(1+k/2).
  for (int k : {1, 2, 3}) {
    const auto fc = atom_factorization_check(EchoLaw::bernoulli(0.5), k);
    const double want =
        std::tgamma(1.0 + k) / std::tgamma(1.0 + 0.5 * k);
    CHECK(fc.lhs == doctest::Approx(want).epsilon(1e-12));
    CHECK(fc.rhs == doctest::Approx(fc.lhs).epsilon(1e-10));
  }
  // Non-trivial atom law: zero mass 0.3, positive part {0.8, 2.0} at odds.
  const auto law =
      EchoLaw::discrete({0.0, 0.8, 2.0}, {0.3, 0.35, 0.35});
  for (int k : {1, 2}) {
    const auto fc = atom_factorization_check(law, k);
    CHECK(fc.rhs == doctest::Approx(fc.lhs).epsilon(1e-10));
  }
  // Third moment condition fails for this law (m3 = 2.9792 > 2.94).
  CHECK_THROWS_AS(atom_factorization_check(law, 3), ew::MomentCondition);
  // Zero-free laws factor trivially.
  const auto fc = atom_factorization_check(EchoLaw::uniform(0.5, 1.5), 2);
  CHECK(fc.rhs == doctest::Approx(fc.lhs).epsilon(1e-14));
}

TEST_SUITE_END();
