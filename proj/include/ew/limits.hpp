// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ew/laws.hpp"
#include "ew/rng.hpp"

namespace ew::limits {

// Monte Carlo population for a limit law. A degenerate pool carries the
// zero law with the flag set instead of throwing, mirroring the analytic
// layer's degeneracy reporting.
struct SamplePool {
  std::vector<double> samples;
  std::int64_t generations = 0;
  std::string law;
  std::uint64_t seed = 0;
  bool degenerate = false;
  // Series pools record the bound on the discarded components: the L1 tail
  // in the supercritical mode, one standard deviation in the centered mode.
  double tail_bound = 0.0;

  double mean() const;
  double moment(std::int64_t k) const;  // raw moment, Kahan-summed
  double variance() const;
};

// Population-dynamics solver for the echoed-weight fixed point
//   L =d V^{m1} L' + xi (1 - V)^{m1} L''   with V uniform on (0, 1)
// and L', L'' independent copies. Pools are rescaled to the exact mean
// 1/Gamma(1+m1) after every generation, so the empirical mean cannot
// random-walk away from its known value at finite N; all higher moments
// remain genuine Monte Carlo output. Zero pool with the degenerate flag
// when E[xi log xi] >= m1.
SamplePool fixpoint_pool(const laws::EchoLaw& law, std::int64_t N,
                         std::int64_t generations, const rng::Tape& tape);

// Component limit attached to the r-th memory-tree root:
//   L_r =d (1 - eps) L^{(eps xi)} beta_r^{p m1},   r >= 2,
// with eps Bernoulli(p) and beta_r Beta(1, r-1); identity at r = 1. base
// must hold the fixed point of the thinned echo law eps xi.
SamplePool component_pool(const laws::WalkParams& params, std::int64_t r,
                          const SamplePool& base, const rng::Tape& tape);

// Truncated series limit sum_{r<=R} X_r L_r with independently drawn
// components, or the mean-centered variant when p m1 lies in (1/2, 1].
// Independent component draws reproduce every component mean, hence the
// series mean, exactly; they do not reproduce the joint law, so
// distributional comparisons against direct simulation are only valid
// when a single component survives (p = 1). Throws HypothesisViolation
// when p m1 <= 1/2.
SamplePool series_limit_pool(const laws::WalkParams& params, std::int64_t R,
                             std::int64_t N, const rng::Tape& tape,
                             std::int64_t generations = 200);

// Max over t_grid of the characteristic-function residual of the fixed
// point: |ecf(t) - avg_k ecf(t V_k^{m1}) ecf(t xi_k (1-V_k)^{m1})| with
// aux_draws auxiliary (V, xi) pairs. The pool ECF is tabulated on a step
// 0.01 grid and evaluated by cubic Hermite interpolation, which keeps the
// whole check O((range + K) N) instead of O(K N) per grid point.
double ecf_residual(const SamplePool& pool, const laws::EchoLaw& law,
                    const std::vector<double>& t_grid, std::int64_t aux_draws,
                    const rng::Tape& tape);

}  // namespace ew::limits
