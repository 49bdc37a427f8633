// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "ew/analytic.hpp"
#include "ew/errors.hpp"
#include "ew/numeric.hpp"
#include "ew/walk.hpp"

namespace ew::ensemble {

const char* statistic_name(StatKind kind) {
  switch (kind) {
    case StatKind::kRaw: return "raw";
    case StatKind::kAbs: return "abs";
    case StatKind::kScaled: return "scaled";
    case StatKind::kCenteredLinear: return "centered-linear";
    case StatKind::kCenteredLog: return "centered-log";
    case StatKind::kMartingale: return "martingale";
  }
  return "raw";
}

StatKind parse_statistic(const std::string& text) {
  for (StatKind kind :
       {StatKind::kRaw, StatKind::kAbs, StatKind::kScaled,
        StatKind::kCenteredLinear, StatKind::kCenteredLog,
        StatKind::kMartingale}) {
    if (text == statistic_name(kind)) return kind;
  }
  throw ParseError("unknown statistic: " + text);
}

namespace {

// Per-checkpoint affine reading value = scale * (S - center).
struct Transform {
  std::vector<double> scale;
  std::vector<double> center;
};

Transform make_transform(const laws::WalkParams& params, StatKind kind,
                         const std::vector<std::int64_t>& checkpoints) {
  Transform tr;
  const std::size_t c = checkpoints.size();
  tr.scale.assign(c, 1.0);
  tr.center.assign(c, 0.0);
  const double pm1 = params.p * params.echo.mean();
  switch (kind) {
    case StatKind::kRaw:
    case StatKind::kAbs:
      break;
    case StatKind::kScaled: {
      const double e = laws::classify(params).scaling_exponent;
      for (std::size_t i = 0; i < c; ++i)
        tr.scale[i] = std::pow(static_cast<double>(checkpoints[i]), -e);
      break;
    }
    case StatKind::kCenteredLinear: {
      if (std::abs(1.0 - pm1) < 1e-12)
        throw HypothesisViolation(
            "linear centering is undefined at p m1 = 1");
      const double c1 = (1.0 - params.p) * params.spin.mean() / (1.0 - pm1);
      for (std::size_t i = 0; i < c; ++i) {
        const auto n = static_cast<double>(checkpoints[i]);
        tr.center[i] = c1 * n;
        tr.scale[i] = std::pow(n, -pm1);
      }
      break;
    }
    case StatKind::kCenteredLog: {
      const double c2 = (1.0 - params.p) * params.spin.mean();
      for (std::size_t i = 0; i < c; ++i) {
        const auto n = static_cast<double>(checkpoints[i]);
        tr.center[i] = c2 * n * std::log(n);
        tr.scale[i] = 1.0 / n;
      }
      break;
    }
    case StatKind::kMartingale: {
      for (std::size_t i = 0; i < c; ++i) {
        const auto n = static_cast<double>(checkpoints[i]);
        tr.center[i] = analytic::walk_mean(params, checkpoints[i]);
        tr.scale[i] = std::exp(std::lgamma(n) - std::lgamma(n + pm1));
      }
      break;
    }
  }
  return tr;
}

}  // namespace

EnsembleSummary run(const laws::WalkParams& params, StatKind kind,
                    const std::vector<std::int64_t>& checkpoints,
                    std::int64_t replicates, const rng::Tape& tape,
                    int threads) {
  params.validate();
  if (checkpoints.empty() || replicates < 1 || threads < 1)
    throw BadIndices("need checkpoints, replicates and workers");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 ||
        (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
      throw BadIndices("checkpoints must be strictly increasing and >= 1");
  }
  const Transform tr = make_transform(params, kind, checkpoints);
  const std::int64_t horizon = checkpoints.back();
  const std::size_t cp = checkpoints.size();
  const bool abs_value = kind == StatKind::kAbs;

  std::vector<std::vector<double>> values(
      cp, std::vector<double>(static_cast<std::size_t>(replicates)));
  const auto worker = [&](std::int64_t lo, std::int64_t hi) {
    walk::Trajectory scratch;
    for (std::int64_t i = lo; i < hi; ++i) {
      walk::simulate_into(params, horizon,
                          rng::Stream(tape, static_cast<std::uint64_t>(i)),
                          scratch);
      for (std::size_t c = 0; c < cp; ++c) {
        const double s =
            scratch.positions[static_cast<std::size_t>(checkpoints[c] - 1)];
        const double v = (abs_value ? std::abs(s) : s) - tr.center[c];
        values[c][static_cast<std::size_t>(i)] = tr.scale[c] * v;
      }
    }
  };
  if (threads == 1) {
    worker(0, replicates);
  } else {
    std::vector<std::thread> crew;
    const std::int64_t block = (replicates + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t lo = t * block;
      const std::int64_t hi = std::min<std::int64_t>(replicates, lo + block);
      if (lo >= hi) break;
      crew.emplace_back(worker, lo, hi);
    }
    for (auto& th : crew) th.join();
  }

  EnsembleSummary out;
  out.kind = kind;
  out.replicates = replicates;
  out.seed = tape.master_seed();
  out.rows.resize(cp);
  std::vector<double> sorted;
  for (std::size_t c = 0; c < cp; ++c) {
    auto& row = out.rows[c];
    row.checkpoint = checkpoints[c];
    // Replicate-index order, independent of the worker partition.
    const auto mv = numeric::mean_var(values[c].data(), values[c].size());
    row.mean = mv.mean;
    row.var = mv.var;
    sorted = values[c];
    std::sort(sorted.begin(), sorted.end());
    row.q05 = numeric::quantile_sorted(sorted, 0.05);
    row.q25 = numeric::quantile_sorted(sorted, 0.25);
    row.q50 = numeric::quantile_sorted(sorted, 0.50);
    row.q75 = numeric::quantile_sorted(sorted, 0.75);
    row.q95 = numeric::quantile_sorted(sorted, 0.95);
  }
  return out;
}

RateEstimate rate_estimate(const EnsembleSummary& summary) {
  const auto& rows = summary.rows;
  if (rows.size() < 4)
    throw InsufficientCheckpoints("rate estimate needs four checkpoints");
  const double span = static_cast<double>(rows.back().checkpoint) /
                      static_cast<double>(rows.front().checkpoint);
  if (span < 100.0)
    throw InsufficientCheckpoints("rate estimate needs two decades of n");
  std::vector<double> x, y;
  for (const auto& row : rows) {
    if (!(row.mean > 0.0))
      throw HypothesisViolation("rate estimate needs positive means");
    x.push_back(std::log(static_cast<double>(row.checkpoint)));
    y.push_back(std::log(row.mean));
  }
  const auto fit = numeric::ols(x, y);
  return {fit.slope, fit.slope_se};
}

bool MartingaleDiagnostic::mean_compatible_with_zero(double z) const {
  for (std::size_t c = 0; c < summary.rows.size(); ++c)
    if (std::abs(summary.rows[c].mean) > z * mean_se[c]) return false;
  return true;
}

MartingaleDiagnostic martingale_diagnostic(
    const laws::WalkParams& params,
    const std::vector<std::int64_t>& checkpoints, std::int64_t replicates,
    const rng::Tape& tape, int threads) {
  MartingaleDiagnostic diag;
  diag.summary = run(params, StatKind::kMartingale, checkpoints, replicates,
                     tape, threads);
  const auto& rows = diag.summary.rows;
  for (const auto& row : rows)
    diag.mean_se.push_back(
        std::sqrt(row.var / static_cast<double>(replicates)));
  // Stabilization compares the last checkpoint against one a decade
  // earlier (or the first checkpoint when the grid is narrower).
  std::size_t ref = 0;
  for (std::size_t c = 0; c < rows.size(); ++c)
    if (rows[c].checkpoint * 10 <= rows.back().checkpoint) ref = c;
  diag.reference = rows[ref].checkpoint;
  const double base = rows[ref].var;
  diag.variance_change =
      base > 0.0 ? std::abs(rows.back().var - base) / base : 0.0;
  diag.variance_stabilized = diag.variance_change < 0.1;
  return diag;
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b,
                       double alpha) {
  if (a.size() < 100 || b.size() < 100)
    throw TooFewSamples("two-sample distance needs 100 points per side");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw OutOfDomain("level must lie in (0, 1)");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  KsResult out;
  out.statistic = numeric::ks_statistic_sorted(a, b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  out.threshold = c * std::sqrt((na + nb) / (na * nb));
  out.reject = out.statistic > out.threshold;
  return out;
}

}  // namespace ew::ensemble
