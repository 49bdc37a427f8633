// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ew/analytic.hpp"
#include "ew/branching.hpp"
#include "ew/ensemble.hpp"
#include "ew/errors.hpp"
#include "ew/laws.hpp"
#include "ew/limits.hpp"
#include "ew/numeric.hpp"
#include "ew/rng.hpp"
#include "ew/tree.hpp"
#include "ew/urn.hpp"
#include "ew/walk.hpp"

namespace ew::verify {
namespace {

using laws::EchoLaw;
using laws::SpinLaw;
using laws::WalkParams;
using rng::Stream;
using rng::Tape;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

// Distinct deterministic tape per (criterion, sub-experiment), so any
// subset of criteria replays exactly as it does inside the full suite.
Tape sub_tape(std::uint64_t seed, int id, std::uint64_t sub) {
  return Tape(numeric::splitmix64(
      seed + 1000003ull * static_cast<std::uint64_t>(id) + sub));
}

// |measured - exact| <= z * se, plus a relative epsilon so deterministic
// configurations with se = 0 compare cleanly.
ClauseResult band_clause(std::string label, double measured, double se,
                         double exact, double z, std::string extra = {}) {
  const double dev = std::abs(measured - exact);
  const double slack = 1e-9 * std::max(1.0, std::abs(exact));
  ClauseResult c;
  c.label = std::move(label);
  c.pass = dev <= z * se + slack;
  const std::string devtext = se > 0.0 ? fmt(dev / se) + " se" : "exact";
  c.detail = "measured " + fmt(measured) + " +- " + fmt(se) + " vs exact " +
             fmt(exact) + " (dev " + devtext + ", allow " + fmt(z) + " se)";
  if (!extra.empty()) {
    c.detail += "; " + extra;
  }
  return c;
}

CriterionResult finish(CriterionResult r) {
  r.pass = std::all_of(r.clauses.begin(), r.clauses.end(),
                       [](const ClauseResult& c) { return c.pass; });
  return r;
}

// Least-squares slope of log E S~_n against log n, the closed-form
// counterpart of the empirical rate estimate.
double exact_mean_slope(const WalkParams& params,
                        const std::vector<std::int64_t>& cps) {
  std::vector<double> lx, ly;
  for (auto n : cps) {
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(analytic::walk_mean(params, n)));
  }
  return numeric::ols(lx, ly).slope;
}

// Criterion 1: ensemble means against the closed-form mean for the nine
// (retention, echo) combinations with unit spins.
CriterionResult c1(std::uint64_t seed, int threads) {
  CriterionResult r{1, "ensemble means match the closed form (nine configurations)",
                    false, {}};
  const std::vector<double> ps = {0.5, 0.8, 1.0};
  const std::vector<std::string> echoes = {"const:1", "const:2",
                                           "bernoulli:0.5"};
  const std::vector<std::int64_t> cps = {64, 512, 4096};
  const std::int64_t N = 20000;
  std::uint64_t sub = 0;
  for (double p : ps) {
    for (const auto& echo : echoes) {
      WalkParams params{p, laws::parse_echo_law(echo), SpinLaw::constant(1.0)};
      const auto summary =
          ensemble::run(params, ensemble::StatKind::kRaw, cps, N,
                        sub_tape(seed, 1, sub++), threads);
      for (const auto& row : summary.rows) {
        const double exact = analytic::walk_mean(params, row.checkpoint);
        const double se = std::sqrt(row.var / static_cast<double>(N));
        r.clauses.push_back(band_clause(
            "mean (p=" + fmt(p) + ", echo " + echo + ", n=" +
                std::to_string(row.checkpoint) + ")",
            row.mean, se, exact, 4.0));
      }
    }
  }
  return finish(r);
}

// Criterion 2: empirical growth exponents in the supercritical and
// subcritical regimes, and the log-corrected mean at criticality.
CriterionResult c2(std::uint64_t seed, int threads) {
  CriterionResult r{2, "growth-rate recovery and the critical log correction",
                    false, {}};
  const std::vector<std::int64_t> cps = {64,   128,  256,  512,  1024,
                                         2048, 4096, 8192, 16384};

  {
    WalkParams params{0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
    const auto summary =
        ensemble::run(params, ensemble::StatKind::kRaw, cps, 20000,
                      sub_tape(seed, 2, 0), threads);
    const auto rate = ensemble::rate_estimate(summary);
    ClauseResult c;
    c.label = "supercritical slope (p=0.8, echo const:2)";
    c.pass = std::abs(rate.slope - 1.6) <= 0.05;
    c.detail = "measured " + fmt(rate.slope) + " +- " + fmt(rate.stderr_) +
               " vs target 1.6 (band 0.05); finite-horizon closed-form slope " +
               fmt(exact_mean_slope(params, cps));
    r.clauses.push_back(c);
  }
  {
    WalkParams params{0.5, EchoLaw::constant(1.0), SpinLaw::constant(1.0)};
    const auto summary =
        ensemble::run(params, ensemble::StatKind::kRaw, cps, 200,
                      sub_tape(seed, 2, 1), threads);
    const auto rate = ensemble::rate_estimate(summary);
    ClauseResult c;
    c.label = "subcritical slope (p=0.5, echo const:1)";
    c.pass = std::abs(rate.slope - 1.0) <= 0.05;
    c.detail = "measured " + fmt(rate.slope) + " +- " + fmt(rate.stderr_) +
               " vs target 1 (band 0.05); finite-horizon closed-form slope " +
               fmt(exact_mean_slope(params, cps));
    r.clauses.push_back(c);
  }
  {
    // Log-corrected critical mean. The criterion demands the n -> infinity
    // constant 0.5 within 10% already at n = 2^16, but the harmonic drift
    // decays like (1 + gamma + log log n)/log n, which is still 14% high
    // there. The clause states both numbers and fails honestly.
    WalkParams params{
        0.5, EchoLaw::discrete({1.0, 3.0}, {0.5, 0.5}), SpinLaw::constant(1.0)};
    const std::int64_t n = 65536;
    const std::int64_t N = 16384;
    const auto summary =
        ensemble::run(params, ensemble::StatKind::kRaw, {n}, N,
                      sub_tape(seed, 2, 2), threads);
    const double denom = static_cast<double>(n) * std::log(static_cast<double>(n));
    const double measured = summary.rows[0].mean / denom;
    const double se =
        std::sqrt(summary.rows[0].var / static_cast<double>(N)) / denom;
    const double exact = analytic::walk_mean(params, n) / denom;
    ClauseResult c;
    c.label = "critical log-corrected mean (p=0.5, echo {1,3}, n=65536)";
    c.pass = std::abs(measured - 0.5) <= 0.05;
    c.detail = "measured " + fmt(measured) + " +- " + fmt(se) +
               " vs limit 0.5 (band 0.45..0.55); exact finite-n value " +
               fmt(exact) + "; the band is first met near n = 7.1e6";
    r.clauses.push_back(c);
  }
  return finish(r);
}

// Criterion 3: supercritical scaled mean against the limit constant.
CriterionResult c3(std::uint64_t seed, int threads) {
  CriterionResult r{3, "supercritical scaled-mean limit constant", false, {}};
  WalkParams params{0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
  const std::int64_t n = 4096;
  const std::int64_t N = 20000;
  const auto summary =
      ensemble::run(params, ensemble::StatKind::kScaled, {n}, N,
                    sub_tape(seed, 3, 0), threads);
  const double se = std::sqrt(summary.rows[0].var / static_cast<double>(N));
  const double limit = analytic::limit_mean(params).value;
  const double finite =
      analytic::walk_mean(params, n) / std::pow(static_cast<double>(n), 1.6);
  r.clauses.push_back(band_clause(
      "mean of S~_n / n^1.6 at n=4096", summary.rows[0].mean, se, limit, 4.0,
      "exact finite-n mean " + fmt(finite)));
  return finish(r);
}

// Criterion 4: the degeneracy dichotomy for pure-echo constant laws.
CriterionResult c4(std::uint64_t seed, int threads) {
  CriterionResult r{4, "degenerate vs nondegenerate pure-echo limits", false, {}};
  const std::int64_t n = 4096;
  const std::int64_t N = 20000;
  {
    // xi = 3: xi log xi >= m1, so the rescaled limit is 0 almost surely,
    // yet the mean of S~_n/n^3 stays near 1/6; the collapse shows in the
    // median long before the 95th percentile. The q95 < 0.05 demand is
    // not met at n = 4096 and the clause fails honestly.
    WalkParams params{1.0, EchoLaw::constant(3.0), SpinLaw::constant(1.0)};
    const auto summary =
        ensemble::run(params, ensemble::StatKind::kScaled, {n}, N,
                      sub_tape(seed, 4, 0), threads);
    const auto& row = summary.rows[0];
    const double mean_exact =
        analytic::walk_mean(params, n) / std::pow(static_cast<double>(n), 3.0);
    ClauseResult c;
    c.label = "degenerate tail (p=1, echo const:3): q95 of S~_n/n^3 at n=4096";
    c.pass = row.q95 < 0.05;
    c.detail = "measured q95 " + fmt(row.q95) + " vs requirement < 0.05; median " +
               fmt(row.q50) + ", mean " + fmt(row.mean) +
               " (exact mean stays at " + fmt(mean_exact) +
               " while the mass drains to 0, so the upper tail is the last to go)";
    r.clauses.push_back(c);
  }
  {
    WalkParams params{1.0, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
    const auto summary =
        ensemble::run(params, ensemble::StatKind::kScaled, {n}, N,
                      sub_tape(seed, 4, 1), threads);
    const auto& row = summary.rows[0];
    ClauseResult c;
    c.label = "nondegenerate bulk (p=1, echo const:2): median of S~_n/n^2";
    c.pass = row.q50 > 0.1;
    c.detail = "measured median " + fmt(row.q50) +
               " vs requirement > 0.1; mean " + fmt(row.mean) +
               " (limit mean " + fmt(analytic::limit_mean(params).value) + ")";
    r.clauses.push_back(c);
  }
  return finish(r);
}

// Criterion 5: the walk and the percolated memory tree, grown from one
// shared tape, must reproduce each other's positions exactly.
CriterionResult c5(std::uint64_t seed, int /*threads*/) {
  CriterionResult r{5, "walk and memory-tree coupling on shared tapes", false, {}};
  WalkParams params{0.7, EchoLaw::exponential(1.0), SpinLaw::normal(0.0, 1.0)};
  const std::int64_t n = 512;
  const std::int64_t tapes = 1000;
  std::int64_t failures = 0;
  double worst = 0.0;
  for (std::int64_t i = 0; i < tapes; ++i) {
    const Tape tape = sub_tape(seed, 5, static_cast<std::uint64_t>(i));
    const Stream stream(tape, 0);
    const auto direct = walk::simulate(params, n, stream);
    const auto tr = tree::grow(params, n, stream);
    const auto spins = tree::root_spins(params.spin, tr, stream);
    const auto rebuilt = tree::reconstruct_walk(tr, spins);
    for (std::int64_t k = 0; k < n; ++k) {
      const double a = direct.positions[k];
      const double b = rebuilt.positions[k];
      const double rel = std::abs(a - b) / std::max(1.0, std::abs(a));
      worst = std::max(worst, rel);
      if (rel > 1e-12) {
        ++failures;
      }
    }
  }
  ClauseResult c;
  c.label = "positions agree to relative 1e-12 (1000 tapes, n=512)";
  c.pass = failures == 0;
  c.detail = "failures " + std::to_string(failures) +
             " of 512000 comparisons (allow 0); worst relative deviation " +
             fmt(worst);
  r.clauses.push_back(c);
  return finish(r);
}

// Criterion 6: urn composite sampler vs the direct pure-echo walk, as a
// two-sample KS test at the 1% level.
CriterionResult c6(std::uint64_t seed, int /*threads*/) {
  CriterionResult r{6, "urn composite law vs direct walk (two-sample KS)", false, {}};
  const std::vector<std::string> echoes = {"bernoulli:0.5", "const:2",
                                           "exp:1.0"};
  const std::vector<std::int64_t> ns = {8, 64};
  const std::int64_t N = 100000;
  std::uint64_t sub = 0;
  for (std::int64_t n : ns) {
    for (const auto& echo : echoes) {
      WalkParams params{1.0, laws::parse_echo_law(echo), SpinLaw::constant(1.0)};
      const auto composite =
          urn::composite_sample(params, n, N, sub_tape(seed, 6, sub++));
      const Tape direct_tape = sub_tape(seed, 6, sub++);
      std::vector<double> direct(static_cast<std::size_t>(N));
      walk::Trajectory scratch;
      for (std::int64_t i = 0; i < N; ++i) {
        walk::simulate_into(params, n + 1, Stream(direct_tape, i), scratch);
        direct[static_cast<std::size_t>(i)] = scratch.positions.back();
      }
      const auto ks = ensemble::ks_two_sample(composite, direct, 0.01);
      ClauseResult c;
      c.label = "composite vs step-" + std::to_string(n + 1) + " walk (echo " +
                echo + ")";
      c.pass = !ks.reject;
      c.detail = "KS statistic " + fmt(ks.statistic) + " vs 1% threshold " +
                 fmt(ks.threshold) + " (100000 per side): " +
                 (ks.reject ? "rejected" : "not rejected");
      r.clauses.push_back(c);
    }
  }
  return finish(r);
}

// Criterion 7: additive martingale mean 1 and Yule counts e^t.
CriterionResult c7(std::uint64_t seed, int /*threads*/) {
  CriterionResult r{7, "branching-walk martingale and Yule counts", false, {}};
  const std::vector<std::string> echoes = {"const:2", "bernoulli:0.5"};
  const std::vector<double> times = {2.0, 4.0, 6.0};
  const std::int64_t runs = 10000;
  for (std::size_t li = 0; li < echoes.size(); ++li) {
    const EchoLaw law = laws::parse_echo_law(echoes[li]);
    const Tape tape = sub_tape(seed, 7, li);
    std::vector<std::vector<double>> w(times.size());
    std::vector<std::vector<double>> counts(times.size());
    for (std::int64_t i = 0; i < runs; ++i) {
      const auto state = branching::simulate_brw(
          law, branching::TimeHorizon{times.back()}, Stream(tape, i));
      const auto ws = branching::w_process(state, 1.0, times);
      for (std::size_t k = 0; k < times.size(); ++k) {
        w[k].push_back(ws[k]);
        counts[k].push_back(static_cast<double>(state.count_at(times[k])));
      }
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
      const auto mv = numeric::mean_var(w[k].data(), w[k].size());
      r.clauses.push_back(band_clause(
          "E W_t(1) (echo " + echoes[li] + ", t=" + fmt(times[k]) + ")",
          mv.mean, std::sqrt(mv.var / static_cast<double>(runs)), 1.0, 4.0));
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
      const auto mv = numeric::mean_var(counts[k].data(), counts[k].size());
      r.clauses.push_back(band_clause(
          "E Sigma_t(0) (echo " + echoes[li] + ", t=" + fmt(times[k]) + ")",
          mv.mean, std::sqrt(mv.var / static_cast<double>(runs)),
          std::exp(times[k]), 4.0));
    }
  }
  return finish(r);
}

// Criterion 8: both sides of the one-particle (many-to-one) reduction for
// three endpoint functionals.
CriterionResult c8(std::uint64_t seed, int /*threads*/) {
  CriterionResult r{8, "many-to-one reduction for three functionals", false, {}};
  const EchoLaw law = EchoLaw::discrete({0.5, 2.0}, {0.5, 0.5});
  const double theta = 1.0;
  const double t = 3.0;
  const std::int64_t N = 100000;
  const std::vector<std::pair<std::string, std::function<double(double)>>> fs =
      {{"f = 1", [](double) { return 1.0; }},
       {"f = exp(theta x)", [](double x) { return std::exp(x); }},
       {"f = 1(x > 0)", [](double x) { return x > 0.0 ? 1.0 : 0.0; }}};
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const auto res = branching::many_to_one_check(law, theta, t, fs[k].second,
                                                 N, sub_tape(seed, 8, k));
    ClauseResult c;
    c.label = "cloud vs spine, " + fs[k].first;
    c.pass = res.compatible(3.0);
    const double gap = std::abs(res.lhs - res.rhs);
    c.detail = "lhs " + fmt(res.lhs) + " +- " + fmt(res.lhs_se) + ", rhs " +
               fmt(res.rhs) + " +- " + fmt(res.rhs_se) + ", gap " + fmt(gap) +
               " = " + fmt(res.pooled_se() > 0.0 ? gap / res.pooled_se() : 0.0) +
               " pooled se (allow 3)";
    r.clauses.push_back(c);
  }
  return finish(r);
}

// Criterion 9: fixed-point pool moments and the characteristic-function
// residual of the smoothing transform.
CriterionResult c9(std::uint64_t seed, int /*threads*/) {
  CriterionResult r{9, "fixed-point pool moments and transform residual", false, {}};
  const EchoLaw law = EchoLaw::bernoulli(0.5);
  const std::int64_t N = 100000;
  const auto pool = limits::fixpoint_pool(law, N, 200, sub_tape(seed, 9, 0));
  const double m1_exact = 1.1283791670955126;  // 1/Gamma(3/2)
  {
    const double m1 = pool.mean();
    ClauseResult c;
    c.label = "pool moment k=1 (echo bernoulli:0.5)";
    c.pass = std::abs(m1 - m1_exact) <= 0.02 * m1_exact;
    c.detail = "measured " + fmt(m1) + " vs exact " + fmt(m1_exact) +
               " (tolerance 2%); the pool is renormalised to this mean each "
               "generation, so the clause pins the normalisation";
    r.clauses.push_back(c);
  }
  {
    const double m2 = pool.moment(2);
    ClauseResult c;
    c.label = "pool moment k=2 (echo bernoulli:0.5)";
    c.pass = std::abs(m2 - 2.0) <= 0.02 * 2.0;
    c.detail = "measured " + fmt(m2) + " vs exact 2 (tolerance 2%)";
    r.clauses.push_back(c);
  }
  {
    std::vector<double> grid;
    for (int i = 0; i <= 500; ++i) {
      grid.push_back(0.01 * i);
    }
    const double residual =
        limits::ecf_residual(pool, law, grid, N, sub_tape(seed, 9, 1));
    ClauseResult c;
    c.label = "characteristic-function residual on [-5,5]";
    c.pass = residual < 0.02;
    c.detail = "max residual " + fmt(residual) +
               " vs requirement < 0.02 (501 grid points on [0,5]; conjugate "
               "symmetry covers the negative half)";
    r.clauses.push_back(c);
  }
  return finish(r);
}

// Criterion 10: moment-map minimiser and the uniform-integrability flags.
CriterionResult c10(std::uint64_t /*seed*/, int /*threads*/) {
  CriterionResult r{10, "moment-map minimiser and uniform-integrability grid",
                    false, {}};
  {
    const double measured = laws::phi_minimizer(EchoLaw::exponential(1.0), 1.0);
    const double exact = 1.4616321449683623;  // argmin of Gamma on (0, inf)
    ClauseResult c;
    c.label = "phi minimiser for exp:1.0 at theta=1";
    c.pass = std::abs(measured - exact) <= 1e-3;
    c.detail = "measured " + fmt(measured) + " vs exact " + fmt(exact) +
               " (tolerance 1e-3); phi_1(r) = Gamma(r) for the unit "
               "exponential law";
    r.clauses.push_back(c);
  }
  const std::vector<std::pair<std::string, bool>> grid = {
      {"const:1", true},    {"const:2", true},        {"const:3", false},
      {"bernoulli:0.5", true}, {"exp:1.0", true},     {"lognormal:0.0,1.5", false}};
  for (const auto& [spec, expected] : grid) {
    WalkParams params{1.0, laws::parse_echo_law(spec), SpinLaw::constant(1.0)};
    const auto report = laws::classify(params);
    ClauseResult c;
    c.label = "uniform-integrability flag for " + spec;
    c.pass = report.ui_holds == expected;
    c.detail = std::string("classify says ") +
               (report.ui_holds ? "holds" : "fails") + ", hand computation says " +
               (expected ? "holds" : "fails") + " (E[xi log xi] = " +
               fmt(report.xi_log_xi) + " vs m1 = " + fmt(report.pm1) + ")";
    r.clauses.push_back(c);
  }
  return finish(r);
}

// Criterion 11: martingale diagnostics at the variance resonance. The
// mean must sit at zero at every checkpoint; the variance-stabilization
// proxy is run on the criterion-3 configuration, where pm2 = 2 pm1 makes
// the second moment grow like log n, so that clause fails honestly.
CriterionResult c11(std::uint64_t seed, int threads) {
  CriterionResult r{11, "martingale diagnostics at the variance resonance",
                    false, {}};
  WalkParams params{0.8, EchoLaw::constant(2.0), SpinLaw::constant(1.0)};
  const std::vector<std::int64_t> cps = {64, 640, 6400};
  const std::int64_t N = 10000;
  const auto diag = ensemble::martingale_diagnostic(params, cps, N,
                                                    sub_tape(seed, 11, 0),
                                                    threads);
  for (std::size_t k = 0; k < diag.summary.rows.size(); ++k) {
    r.clauses.push_back(band_clause(
        "martingale mean at n=" + std::to_string(diag.summary.rows[k].checkpoint),
        diag.summary.rows[k].mean, diag.mean_se[k], 0.0, 4.0));
  }
  {
    ClauseResult c;
    c.label = "variance stabilization across the last decade";
    c.pass = diag.variance_stabilized;
    std::string vars;
    for (std::size_t k = 0; k < diag.summary.rows.size(); ++k) {
      if (k > 0) {
        vars += ", ";
      }
      vars += "var(" + std::to_string(diag.summary.rows[k].checkpoint) + ") = " +
              fmt(diag.summary.rows[k].var);
    }
    c.detail = vars + "; relative change " + fmt(diag.variance_change) +
               " vs requirement < 0.1 over reference n=" +
               std::to_string(diag.reference) +
               "; at the resonance pm2 = 2 pm1 the second moment grows like "
               "log n, so the proxy keeps drifting";
    r.clauses.push_back(c);
  }
  return finish(r);
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed, int threads) {
  switch (id) {
    case 1:
      return c1(seed, threads);
    case 2:
      return c2(seed, threads);
    case 3:
      return c3(seed, threads);
    case 4:
      return c4(seed, threads);
    case 5:
      return c5(seed, threads);
    case 6:
      return c6(seed, threads);
    case 7:
      return c7(seed, threads);
    case 8:
      return c8(seed, threads);
    case 9:
      return c9(seed, threads);
    case 10:
      return c10(seed, threads);
    case 11:
      return c11(seed, threads);
    default:
      throw BadIndices("criterion id must lie in 1..11, got " +
                       std::to_string(id));
  }
}

std::string format_criterion(const CriterionResult& r) {
  std::string s = "criterion " + std::to_string(r.id) + ": " + r.title + "\n";
  int passed = 0;
  for (const auto& c : r.clauses) {
    s += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.label +
         ": " + c.detail + "\n";
    if (c.pass) {
      ++passed;
    }
  }
  s += "criterion " + std::to_string(r.id) + ": " +
       (r.pass ? "PASS" : "FAIL") + " (" + std::to_string(passed) + "/" +
       std::to_string(r.clauses.size()) + " clauses passed)\n";
  return s;
}

std::vector<int> criteria_for_suite(const std::string& suite) {
  if (suite == "all") {
    std::vector<int> ids(kCriterionCount);
    for (int i = 0; i < kCriterionCount; ++i) {
      ids[i] = i + 1;
    }
    return ids;
  }
  if (suite.size() >= 2 && suite.front() == 'c') {
    int id = 0;
    const auto* begin = suite.data() + 1;
    const auto* end = suite.data() + suite.size();
    const auto [ptr, ec] = std::from_chars(begin, end, id);
    if (ec == std::errc() && ptr == end && id >= 1 && id <= kCriterionCount) {
      return {id};
    }
  }
  throw ConfigError("unknown verification suite '" + suite +
                    "' (use all or c1..c11)");
}

}  // namespace ew::verify
