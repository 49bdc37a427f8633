// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ew/laws.hpp"
#include "ew/rng.hpp"

namespace ew::ensemble {

// The rescalings under which the walk converges, one per limit theorem
// shape, plus the raw and absolute readings used for rate regression.
enum class StatKind {
  kRaw,             // S~_n
  kAbs,             // |S~_n|
  kScaled,          // S~_n / n^e with the regime scaling exponent e
  kCenteredLinear,  // (S~_n - c n) / n^{p m1}, subcritical centering
  kCenteredLog,     // (S~_n - c n log n) / n, critical centering
  kMartingale,      // (n-1)!/Gamma(n+p m1) (S~_n - E S~_n)
};

const char* statistic_name(StatKind kind);
StatKind parse_statistic(const std::string& text);

struct CheckpointSummary {
  std::int64_t checkpoint = 0;
  double mean = 0.0;
  double var = 0.0;  // unbiased sample variance
  double q05 = 0.0, q25 = 0.0, q50 = 0.0, q75 = 0.0, q95 = 0.0;
};

struct EnsembleSummary {
  StatKind kind = StatKind::kRaw;
  std::vector<CheckpointSummary> rows;
  std::int64_t replicates = 0;
  std::uint64_t seed = 0;
};

// N independent trajectories, each observed at every checkpoint of one
// shared path (no restarts between checkpoints). Replicates may be
// simulated by several workers with disjoint tape streams; aggregation
// always runs in replicate-index order, so the summary is bit-identical
// for any worker count.
EnsembleSummary run(const laws::WalkParams& params, StatKind kind,
                    const std::vector<std::int64_t>& checkpoints,
                    std::int64_t replicates, const rng::Tape& tape,
                    int threads = 1);

struct RateEstimate {
  double slope = 0.0;
  double stderr_ = 0.0;
};

// Least squares of log mean against log n across the checkpoint grid.
// Requires at least four checkpoints spanning at least two decades.
RateEstimate rate_estimate(const EnsembleSummary& summary);

struct MartingaleDiagnostic {
  EnsembleSummary summary;       // martingale statistic rows
  std::vector<double> mean_se;   // per checkpoint
  std::int64_t reference = 0;    // checkpoint a decade below the last
  double variance_change = 0.0;  // |var_last - var_ref| / var_ref
  bool variance_stabilized = false;  // variance_change < 0.1

  bool mean_compatible_with_zero(double z) const;
};

// Exactly centered martingale readings: the mean must be zero at every
// checkpoint in every regime, and the variance stabilizes across the last
// decade exactly when the martingale is L2-bounded.
MartingaleDiagnostic martingale_diagnostic(
    const laws::WalkParams& params, const std::vector<std::int64_t>& checkpoints,
    std::int64_t replicates, const rng::Tape& tape, int threads = 1);

struct KsResult {
  double statistic = 0.0;
  double threshold = 0.0;
  bool reject = false;
};

// Two-sample Kolmogorov distance with the asymptotic level-alpha
// threshold c(alpha) sqrt((n_a+n_b)/(n_a n_b)). Requires 100 samples per
// side.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b,
                       double alpha = 0.01);

}  // namespace ew::ensemble
