// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ew/analytic.hpp"
#include "ew/errors.hpp"
#include "ew/laws.hpp"
#include "ew/limits.hpp"
#include "ew/numeric.hpp"
#include "ew/rng.hpp"
#include "ew/walk.hpp"

namespace {

using ew::laws::EchoLaw;
using ew::laws::SpinLaw;
using ew::laws::WalkParams;
using ew::limits::component_pool;
using ew::limits::ecf_residual;
using ew::limits::fixpoint_pool;
using ew::limits::SamplePool;
using ew::limits::series_limit_pool;
using ew::rng::Stream;
using ew::rng::Tape;

std::vector<double> unit_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 100; ++i) g.push_back(0.05 * i);
  return g;
}

// Standard error of the k-th raw moment, straight from the pool spread.
double moment_se(const SamplePool& pool, int k) {
  std::vector<double> powers;
  powers.reserve(pool.samples.size());
  for (double s : pool.samples) powers.push_back(std::pow(s, k));
  const auto mv = ew::numeric::mean_var(powers.data(), powers.size());
  return std::sqrt(mv.var / static_cast<double>(powers.size()));
}

}  // namespace

TEST_SUITE_BEGIN("limits");

TEST_CASE("unit echo law is the exact fixed point") {
  const auto pool = fixpoint_pool(EchoLaw::constant(1.0), 2000, 50, Tape(1));
  for (double s : pool.samples) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ecf_residual(pool, EchoLaw::constant(1.0), unit_grid(), 2000,
                     Tape(2)) < 1e-6);
  // Zero generations leave the initial constant pool, which is the mean.
  const auto init = fixpoint_pool(EchoLaw::bernoulli(0.5), 100, 0, Tape(3));
  for (double s : init.samples)
    CHECK(s == doctest::Approx(1.0 / std::tgamma(1.5)));
}

TEST_CASE("degenerate law yields the flagged zero pool") {
  const auto pool = fixpoint_pool(EchoLaw::constant(3.0), 500, 20, Tape(4));
  CHECK(pool.degenerate);
  for (double s : pool.samples) CHECK(s == 0.0);
  CHECK(ecf_residual(pool, EchoLaw::constant(3.0), unit_grid(), 500,
                     Tape(5)) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("pool reproduces the closed-form moments of the limit law") {
  const auto pool =
      fixpoint_pool(EchoLaw::bernoulli(0.5), 20000, 100, Tape(42));
  // The mean is pinned by the per-generation rescaling; moments two and
  // three are free output of the dynamics.
  CHECK(pool.mean() == doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-12));
  const auto lm = ew::analytic::l_moments(EchoLaw::bernoulli(0.5), 3);
  REQUIRE(lm.valid_k == 3);
  CHECK(std::abs(pool.moment(2) - lm.values[1]) < 0.02 * lm.values[1]);
  CHECK(std::abs(pool.moment(3) - lm.values[2]) < 0.02 * lm.values[2]);
  // Support on the nonnegative axis.
  for (double s : pool.samples) CHECK(s >= 0.0);
  // Nondegenerate law, nondegenerate limit: variance visible at many
  // standard errors of the variance estimate.
  std::vector<double> centered;
  const double mean = pool.mean();
  for (double s : pool.samples) centered.push_back(s - mean);
  ew::numeric::KahanAccumulator c2, c4;
  for (double c : centered) {
    c2.add(c * c);
    c4.add(c * c * c * c);
  }
  const double nd = static_cast<double>(centered.size());
  const double var = c2.value() / nd;
  const double var_se = std::sqrt((c4.value() / nd - var * var) / nd);
  CHECK(var > 5.0 * var_se);
}

TEST_CASE("a converged pool is stable under one further generation") {
  // Streams are indexed by generation, so the longer run shares every draw
  // of the shorter one and differs by exactly one application of the map.
  const auto before =
      fixpoint_pool(EchoLaw::bernoulli(0.5), 20000, 100, Tape(42));
  const auto after =
      fixpoint_pool(EchoLaw::bernoulli(0.5), 20000, 101, Tape(42));
  for (int k = 1; k <= 3; ++k) {
    const double se = moment_se(before, k);
    CHECK(std::abs(after.moment(k) - before.moment(k)) < 3.0 * se);
  }
}

TEST_CASE("component pool carries the retention atom and the exact mean") {
  const WalkParams params{0.8, EchoLaw::constant(1.5), SpinLaw::constant(1.0)};
  const auto base = fixpoint_pool(EchoLaw::thinned(params.echo, params.p),
                                  20000, 100, Tape(300));
  REQUIRE_FALSE(base.degenerate);
  const auto comp = component_pool(params, 3, base, Tape(301));
  const double n = static_cast<double>(comp.samples.size());
  std::int64_t zeros = 0;
  for (double s : comp.samples) {
    CHECK(s >= 0.0);
    if (s == 0.0) ++zeros;
  }
  // The fixed-point law itself has no atom at zero, so the empirical zero
  // mass is exactly the retention coin.
  const double zero_se = std::sqrt(0.8 * 0.2 / n);
  CHECK(std::abs(static_cast<double>(zeros) / n - 0.8) < 4.0 * zero_se);
  const double want = ew::analytic::limit_mean_component(params, 3);
  CHECK(std::abs(comp.mean() - want) < 4.0 * moment_se(comp, 1));
  // r = 1 is the identity on the base pool.
  const auto same = component_pool(params, 1, base, Tape(302));
  CHECK(same.samples == base.samples);
  CHECK_THROWS_AS(component_pool(params, 0, base, Tape(303)), ew::BadIndices);
  CHECK_THROWS_AS(component_pool(params, 2, SamplePool{}, Tape(304)),
                  ew::BadIndices);
}

TEST_CASE("series pool reproduces the asymptotic mean constant") {
  // Finite-variance component law (m2 < 2 m1 needs m1 < 2).
  const WalkParams params{0.9, EchoLaw::constant(1.6), SpinLaw::constant(1.0)};
  const auto pool = series_limit_pool(params, 400, 20000, Tape(11), 150);
  const double want = ew::analytic::asymptotic_mean_constant(params).constant;
  CHECK(pool.tail_bound < 0.02);
  CHECK(std::abs(pool.mean() - want) <
        4.0 * moment_se(pool, 1) + pool.tail_bound);
}

TEST_CASE("series pool mean at the second-moment boundary") {
  // m2 = 2 m1 exactly for a constant echo of 2: the limit law has a heavy
  // tail of index two, so the mean estimator deserves a wider margin.
  const WalkParams params{0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
  const auto pool = series_limit_pool(params, 200, 20000, Tape(11), 100);
  const double want = ew::analytic::asymptotic_mean_constant(params).constant;
  CHECK(want == doctest::Approx(0.9326457950584353));
  CHECK(std::abs(pool.mean() - want) <
        5.0 * moment_se(pool, 1) + pool.tail_bound);
}

TEST_CASE("pure echo kills every component after the first") {
  const WalkParams params{1.0, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
  const auto one = series_limit_pool(params, 1, 500, Tape(7), 40);
  const auto five = series_limit_pool(params, 5, 500, Tape(7), 40);
  CHECK(one.samples == five.samples);
  CHECK(five.tail_bound == 0.0);
}

TEST_CASE("pure-echo series matches direct simulation in law") {
  const WalkParams params{1.0, EchoLaw::bernoulli(0.5),
                          SpinLaw::constant(1.0)};
  const auto pool = series_limit_pool(params, 3, 2000, Tape(8), 200);
  std::vector<double> direct;
  const Tape tape(98);
  for (int i = 0; i < 2000; ++i) {
    const auto tr = ew::walk::simulate(params, 4096, Stream(tape, i));
    direct.push_back(tr.positions.back() / std::sqrt(4096.0));
  }
  auto a = pool.samples;
  std::sort(a.begin(), a.end());
  std::sort(direct.begin(), direct.end());
  CHECK(ew::numeric::ks_statistic_sorted(a, direct) <
        1.628 * std::sqrt(2.0 / 2000.0));
}

TEST_CASE("centered series has mean zero") {
  const WalkParams params{0.75, EchoLaw::constant(1.0),
                          SpinLaw::constant(1.0)};
  const auto pool = series_limit_pool(params, 200, 20000, Tape(13), 100);
  CHECK(pool.tail_bound > 0.0);
  CHECK(std::abs(pool.mean()) < 4.0 * moment_se(pool, 1));
}

TEST_CASE("series guards") {
  const SpinLaw unit = SpinLaw::constant(1.0);
  CHECK_THROWS_AS(
      series_limit_pool({0.4, EchoLaw::constant(1.0), unit}, 10, 100, Tape(1)),
      ew::HypothesisViolation);
  CHECK_THROWS_AS(
      series_limit_pool({0.8, EchoLaw::constant(1.6), unit}, 0, 100, Tape(1)),
      ew::BadIndices);
  CHECK_THROWS_AS(
      series_limit_pool({0.8, EchoLaw::constant(1.6), unit}, 10, 0, Tape(1)),
      ew::BadIndices);
  // Centered mode requires the compound limit law in L2.
  CHECK_THROWS_AS(
      series_limit_pool({0.5, EchoLaw::constant(2.0), unit}, 10, 100, Tape(1)),
      ew::MomentCondition);
  // Degenerate echo: zero pool with the flag rather than a throw.
  const auto zero =
      series_limit_pool({1.0, EchoLaw::constant(3.0), unit}, 5, 100, Tape(1));
  CHECK(zero.degenerate);
  for (double s : zero.samples) CHECK(s == 0.0);
}

TEST_CASE("characteristic function solves the fixed-point equation") {
  const auto pool =
      fixpoint_pool(EchoLaw::bernoulli(0.5), 20000, 100, Tape(42));
  const double res =
      ecf_residual(pool, EchoLaw::bernoulli(0.5), unit_grid(), 20000, Tape(17));
  CHECK(res < 0.02);
  CHECK_THROWS_AS(ecf_residual(pool, EchoLaw::bernoulli(0.5), {}, 100, Tape(1)),
                  ew::BadIndices);
  CHECK_THROWS_AS(
      ecf_residual(pool, EchoLaw::bernoulli(0.5), unit_grid(), 0, Tape(1)),
      ew::BadIndices);
}

TEST_CASE("pool moment helpers") {
  SamplePool pool;
  pool.samples = {1.0, 2.0, 3.0};
  CHECK(pool.moment(1) == doctest::Approx(pool.mean()));
  CHECK(pool.moment(2) == doctest::Approx(14.0 / 3.0));
  CHECK(pool.variance() == doctest::Approx(1.0));
  CHECK_THROWS_AS(pool.moment(0), ew::BadIndices);
  CHECK_THROWS_AS(fixpoint_pool(EchoLaw::constant(1.0), 0, 5, Tape(1)),
                  ew::BadIndices);
  CHECK_THROWS_AS(fixpoint_pool(EchoLaw::constant(1.0), 5, -1, Tape(1)),
                  ew::BadIndices);
}

TEST_SUITE_END();
