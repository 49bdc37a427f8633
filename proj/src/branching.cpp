// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/branching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ew/errors.hpp"
#include "ew/kernels.hpp"
#include "ew/numeric.hpp"

namespace ew::branching {

namespace {

constexpr double kMaxExpectedParticles = 1e7;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Appends births to a single-particle state until the predicate stops the
// chain. Particle j consumes the step-j addresses: waiting time at kAux0,
// parent at kIndexSlot, displacement at kEchoSlot, mirroring the walk.
template <typename Stop>
BrwState run_birth_chain(const laws::EchoLaw& law, const rng::Stream& stream,
                         Stop stop) {
  BrwState st;
  st.law = law;
  st.particles.push_back(Particle{});
  double clock = 0.0;
  for (std::int64_t alive = 1;; ++alive) {
    const auto j = static_cast<std::uint64_t>(alive + 1);  // next index
    const double wait =
        stream.exponential(j, rng::kAux0, static_cast<double>(alive));
    if (stop(alive, clock + wait)) break;
    clock += wait;
    const auto parent = static_cast<std::int64_t>(
        1 + stream.pick(j, rng::kIndexSlot,
                        static_cast<std::uint64_t>(alive)));
    const double xi = law.sample(stream, j, rng::kEchoSlot);
    Particle p;
    p.position =
        st.particles[static_cast<std::size_t>(parent - 1)].position +
        std::log(xi);
    p.birth_time = clock;
    p.parent = parent;
    st.particles.push_back(p);
  }
  return st;
}

// Shifted sum of e^{theta x} over the first `count` particles; returns the
// logarithm. theta = 0 counts particles (0 * -inf reads as exponent 0).
double log_exp_sum(const std::vector<Particle>& particles, std::size_t count,
                   double theta) {
  if (theta == 0.0) return std::log(static_cast<double>(count));
  double shift = -kInf;
  std::vector<double> exponents;
  exponents.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double e = theta * particles[i].position;
    exponents.push_back(e);
    if (e > shift && e < kInf) shift = e;
  }
  if (shift == -kInf) shift = 0.0;
  for (double& e : exponents) e -= shift;
  std::vector<double> terms(count);
  const auto& ops = kernels::active();
  ops.vexp(exponents.data(), terms.data(), count);
  return shift + std::log(ops.sum(terms.data(), count));
}

}  // namespace

std::int64_t BrwState::count_at(double t) const {
  const auto it = std::upper_bound(
      particles.begin(), particles.end(), t,
      [](double v, const Particle& p) { return v < p.birth_time; });
  return it - particles.begin();
}

BrwState simulate_brw(const laws::EchoLaw& law, TimeHorizon horizon,
                      const rng::Stream& stream) {
  if (!(horizon.t >= 0.0)) throw BadIndices("time horizon must be >= 0");
  if (std::exp(horizon.t) > kMaxExpectedParticles)
    throw HorizonTooLarge("expected particle count exceeds 1e7");
  auto st = run_birth_chain(law, stream, [&](std::int64_t, double when) {
    return when > horizon.t;
  });
  st.clock = horizon.t;
  return st;
}

BrwState simulate_brw(const laws::EchoLaw& law, CountHorizon horizon,
                      const rng::Stream& stream) {
  if (horizon.n < 1) throw BadIndices("particle count must be >= 1");
  if (static_cast<double>(horizon.n) > kMaxExpectedParticles)
    throw HorizonTooLarge("particle count exceeds 1e7");
  auto st = run_birth_chain(law, stream, [&](std::int64_t alive, double) {
    return alive >= horizon.n;
  });
  st.clock = st.particles.back().birth_time;
  return st;
}

double log_sigma_at(const BrwState& state, double theta, double t) {
  if (t > state.clock)
    throw BadIndices("checkpoint beyond the simulated horizon");
  const auto count = static_cast<std::size_t>(state.count_at(t));
  return log_exp_sum(state.particles, count, theta);
}

double sigma(const BrwState& state, double theta) {
  return std::exp(log_exp_sum(state.particles, state.particles.size(), theta));
}

std::vector<double> w_process(const BrwState& state, double theta,
                              const std::vector<double>& checkpoints) {
  const double m_theta = state.law.moment(theta);
  if (!std::isfinite(m_theta))
    throw OutOfMomentDomain("echo law lacks the requested moment");
  std::vector<double> out;
  out.reserve(checkpoints.size());
  for (double t : checkpoints)
    out.push_back(std::exp(log_sigma_at(state, theta, t) - m_theta * t));
  return out;
}

std::vector<double> embedded_walk(const BrwState& state, double theta) {
  const std::size_t count = state.particles.size();
  std::vector<double> exponents;
  exponents.reserve(count);
  for (const auto& p : state.particles) {
    const double e = theta * p.position;
    exponents.push_back(theta == 0.0 ? 0.0 : e);
  }
  std::vector<double> terms(count);
  kernels::active().vexp(exponents.data(), terms.data(), count);
  std::vector<double> out;
  out.reserve(count);
  numeric::KahanAccumulator acc;
  for (double v : terms) {
    acc.add(v);
    out.push_back(acc.value());
  }
  return out;
}

double SpineProcess::position_at(double s) const {
  numeric::KahanAccumulator acc;
  for (std::size_t i = 0; i < jumps.size() && jump_times[i] <= s; ++i)
    acc.add(jumps[i]);
  return acc.value();
}

double SpineProcess::endpoint() const {
  numeric::KahanAccumulator acc;
  for (double j : jumps) acc.add(j);
  return acc.value();
}

double SpineProcess::total_weight() const {
  double w = 1.0;
  for (double x : weights) w *= x;
  return w;
}

SpineProcess spine_sample(const laws::EchoLaw& law, double theta, double t,
                          const rng::Stream& stream, TiltMode mode) {
  if (!(t >= 0.0)) throw BadIndices("time horizon must be >= 0");
  const double m_theta = law.moment(theta);
  if (!std::isfinite(m_theta))
    throw OutOfMomentDomain("echo law lacks the requested moment");
  const double lambda = m_theta * t;
  if (lambda > 700.0)
    throw HorizonTooLarge("spine jump intensity overflows the exponential");

  SpineProcess spine;
  spine.intensity = m_theta;
  spine.horizon = t;

  // Poisson(lambda) count via the uniform-product method.
  const double floor_prod = std::exp(-lambda);
  std::int64_t jump_count = 0;
  double prod = 1.0;
  for (std::uint64_t j = 1;; ++j) {
    prod *= stream.u01(j, rng::kAux1);
    if (prod < floor_prod) break;
    ++jump_count;
  }

  // Exact tilted pmf over finite support: P(jump = log v) prop v^theta p.
  std::vector<double> tilt_values, tilt_cdf;
  if (mode == TiltMode::kExact) {
    const auto fs = law.finite_support();
    if (!fs.finite)
      throw TiltingUnavailable(
          "exact tilting needs finite support; use the weighted mode");
    double total = 0.0;
    for (std::size_t i = 0; i < fs.values.size(); ++i) {
      const double w = std::pow(fs.values[i], theta) * fs.probs[i];
      if (w > 0.0) {
        tilt_values.push_back(std::log(fs.values[i]));
        total += w;
        tilt_cdf.push_back(total);
      }
    }
    for (double& c : tilt_cdf) c /= total;
  }

  spine.jump_times.reserve(static_cast<std::size_t>(jump_count));
  spine.jumps.reserve(static_cast<std::size_t>(jump_count));
  spine.weights.reserve(static_cast<std::size_t>(jump_count));
  for (std::int64_t j = 1; j <= jump_count; ++j) {
    const auto step = static_cast<std::uint64_t>(j);
    spine.jump_times.push_back(stream.u01(step, rng::kAux3) * t);
    if (mode == TiltMode::kExact) {
      const double u = stream.u01(step, rng::kAux2);
      const auto it =
          std::upper_bound(tilt_cdf.begin(), tilt_cdf.end(), u);
      const auto at = it == tilt_cdf.end()
                          ? tilt_values.size() - 1
                          : static_cast<std::size_t>(it - tilt_cdf.begin());
      spine.jumps.push_back(tilt_values[at]);
      spine.weights.push_back(1.0);
    } else {
      const double xi = law.sample(stream, step, rng::kEchoSlot);
      spine.jumps.push_back(std::log(xi));
      spine.weights.push_back(std::pow(xi, theta) / m_theta);
    }
  }

  // Order jumps by their times.
  std::vector<std::size_t> order(spine.jumps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return spine.jump_times[a] < spine.jump_times[b];
  });
  SpineProcess sorted = spine;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.jump_times[i] = spine.jump_times[order[i]];
    sorted.jumps[i] = spine.jumps[order[i]];
    sorted.weights[i] = spine.weights[order[i]];
  }
  return sorted;
}

double ManyToOneResult::pooled_se() const {
  return std::sqrt(lhs_se * lhs_se + rhs_se * rhs_se);
}

bool ManyToOneResult::compatible(double z) const {
  return std::abs(lhs - rhs) <= z * pooled_se();
}

namespace {

struct RunningMoments {
  numeric::KahanAccumulator sum, sumsq;
  void add(double x) {
    sum.add(x);
    sumsq.add(x * x);
  }
  void finish(std::int64_t n, double* mean, double* se) const {
    const double nd = static_cast<double>(n);
    *mean = sum.value() / nd;
    const double var = std::max(0.0, sumsq.value() / nd - *mean * *mean);
    *se = std::sqrt(var / nd);
  }
};

// Ancestral position of a particle at an earlier time s: climb to the most
// recent ancestor already born at s.
double position_at_time(const BrwState& st, std::size_t index, double s) {
  std::size_t at = index;
  while (st.particles[at].birth_time > s)
    at = static_cast<std::size_t>(st.particles[at].parent - 1);
  return st.particles[at].position;
}

template <typename CloudTerm, typename SpineTerm>
ManyToOneResult many_to_one_core(const laws::EchoLaw& law, double theta,
                                 double t, std::int64_t N,
                                 const rng::Tape& tape, TiltMode mode,
                                 CloudTerm cloud_term, SpineTerm spine_term) {
  if (N < 1) throw BadIndices("need N >= 1");
  const double m_theta = law.moment(theta);
  if (!std::isfinite(m_theta))
    throw OutOfMomentDomain("echo law lacks the requested moment");
  RunningMoments lhs, rhs;
  for (std::int64_t i = 0; i < N; ++i) {
    const rng::Stream cloud_stream(tape, static_cast<std::uint64_t>(2 * i));
    const rng::Stream spine_stream(tape,
                                   static_cast<std::uint64_t>(2 * i + 1));
    const auto cloud = simulate_brw(law, TimeHorizon{t}, cloud_stream);
    lhs.add(cloud_term(cloud));
    const auto spine = spine_sample(law, theta, t, spine_stream, mode);
    const double w = spine.total_weight();
    if (w == 0.0) {
      rhs.add(0.0);
    } else {
      const double p_end = spine.endpoint();
      rhs.add(std::exp(m_theta * t - theta * p_end) * w *
              spine_term(spine));
    }
  }
  ManyToOneResult out;
  lhs.finish(N, &out.lhs, &out.lhs_se);
  rhs.finish(N, &out.rhs, &out.rhs_se);
  return out;
}

}  // namespace

ManyToOneResult many_to_one_check(const laws::EchoLaw& law, double theta,
                                  double t,
                                  const std::function<double(double)>& f,
                                  std::int64_t N, const rng::Tape& tape,
                                  TiltMode mode) {
  return many_to_one_core(
      law, theta, t, N, tape, mode,
      [&](const BrwState& cloud) {
        numeric::KahanAccumulator acc;
        for (const auto& p : cloud.particles) acc.add(f(p.position));
        return acc.value();
      },
      [&](const SpineProcess& spine) { return f(spine.endpoint()); });
}

ManyToOneResult many_to_one_check_two_time(
    const laws::EchoLaw& law, double theta, double s, double t,
    const std::function<double(double, double)>& f, std::int64_t N,
    const rng::Tape& tape, TiltMode mode) {
  if (!(s >= 0.0) || s > t) throw BadIndices("need 0 <= s <= t");
  return many_to_one_core(
      law, theta, t, N, tape, mode,
      [&](const BrwState& cloud) {
        numeric::KahanAccumulator acc;
        for (std::size_t i = 0; i < cloud.particles.size(); ++i)
          acc.add(f(position_at_time(cloud, i, s),
                    cloud.particles[i].position));
        return acc.value();
      },
      [&](const SpineProcess& spine) {
        return f(spine.position_at(s), spine.endpoint());
      });
}

}  // namespace ew::branching
