// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ew/laws.hpp"
#include "ew/rng.hpp"

namespace ew::branching {

// One particle of the branching walk. Positions accumulate log echo factors
// along the ancestry; a zero echo factor parks the particle at -infinity.
struct Particle {
  double position = 0.0;
  double birth_time = 0.0;
  std::int64_t parent = 0;  // 1-based index of the parent, 0 for the root
};

// Pure-birth cloud: every particle ever born stays alive, so the particle
// set at time t is the prefix born up to t. Particles are stored in birth
// order, root first. The displacement law is kept for the normalisations
// that need its moments.
struct BrwState {
  std::vector<Particle> particles;
  double clock = 0.0;
  laws::EchoLaw law = laws::EchoLaw::constant(1.0);

  std::int64_t count_at(double t) const;
};

struct TimeHorizon {
  double t = 0.0;
};
struct CountHorizon {
  std::int64_t n = 0;
};

// Birth-chain simulation: with k particles alive the next birth waits an
// Exp(k) time and attaches to a uniformly chosen parent. Expected particle
// count (e^t, or n directly) is capped at 1e7.
BrwState simulate_brw(const laws::EchoLaw& law, TimeHorizon horizon,
                      const rng::Stream& stream);
BrwState simulate_brw(const laws::EchoLaw& law, CountHorizon horizon,
                      const rng::Stream& stream);

// log of the additive functional sum e^{theta x} over particles born by
// time t; evaluated with a max shift. The root pins the sum above zero.
double log_sigma_at(const BrwState& state, double theta, double t);

// Additive functional at the state's clock.
double sigma(const BrwState& state, double theta);

// Normalised martingale values W_t = e^{-m_theta t} Sigma_t at the given
// checkpoint times (each <= clock).
std::vector<double> w_process(const BrwState& state, double theta,
                              const std::vector<double>& checkpoints);

// Prefix sums of e^{theta x} in birth order: entry n-1 is the additive
// functional just after the (n-1)-th birth, distributed as a pure-echo
// walk position with echo law xi^theta.
std::vector<double> embedded_walk(const BrwState& state, double theta);

enum class TiltMode { kExact, kWeighted };

// Compound-Poisson spine: Poisson(m_theta t) jumps, each a tilted log echo
// value. In weighted mode the jumps come from the base law and carry
// importance weights xi^theta / m_theta.
struct SpineProcess {
  double intensity = 0.0;  // m_theta
  double horizon = 0.0;
  std::vector<double> jump_times;  // ascending in [0, horizon]
  std::vector<double> jumps;
  std::vector<double> weights;  // all 1 in exact mode

  double position_at(double s) const;  // sum of jumps with time <= s
  double endpoint() const;
  double total_weight() const;
};

// errors: TiltingUnavailable when exact mode is requested for a law
// without finite support; OutOfMomentDomain when m_theta diverges.
SpineProcess spine_sample(const laws::EchoLaw& law, double theta, double t,
                          const rng::Stream& stream,
                          TiltMode mode = TiltMode::kExact);

struct ManyToOneResult {
  double lhs = 0.0;
  double lhs_se = 0.0;
  double rhs = 0.0;
  double rhs_se = 0.0;

  double pooled_se() const;
  bool compatible(double z) const;  // |lhs - rhs| <= z * pooled_se
};

// Monte Carlo of both sides of the one-particle reduction for an endpoint
// functional f: LHS averages sum_x f(x(t)) over branching runs, RHS
// averages e^{-theta P(t) + m_theta t} f(P(t)) over spine runs. Run i uses
// tape streams 2i (cloud) and 2i+1 (spine).
ManyToOneResult many_to_one_check(const laws::EchoLaw& law, double theta,
                                  double t,
                                  const std::function<double(double)>& f,
                                  std::int64_t N, const rng::Tape& tape,
                                  TiltMode mode = TiltMode::kExact);

// Two-time variant for f(x(s), x(t)) with 0 <= s <= t, evaluating each
// particle's ancestral position at s on the LHS and the spine position at
// s on the RHS.
ManyToOneResult many_to_one_check_two_time(
    const laws::EchoLaw& law, double theta, double s, double t,
    const std::function<double(double, double)>& f, std::int64_t N,
    const rng::Tape& tape, TiltMode mode = TiltMode::kExact);

}  // namespace ew::branching
