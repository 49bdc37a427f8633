// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/limits.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ew/analytic.hpp"
#include "ew/errors.hpp"
#include "ew/numeric.hpp"
#include "ew/urn.hpp"

namespace ew::limits {

namespace {

double pool_kahan_mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return numeric::kahan_sum(v.data(), v.size()) / static_cast<double>(v.size());
}

// Stream indices below 2^32 belong to the generation loop; per-sample
// streams of the series pool start at 2^32 so the two ranges never meet.
constexpr std::uint64_t kSeriesStreamBase = std::uint64_t{1} << 32;

}  // namespace

double SamplePool::mean() const { return pool_kahan_mean(samples); }

double SamplePool::moment(std::int64_t k) const {
  if (k < 1) throw BadIndices("moment order must be >= 1");
  if (samples.empty()) return 0.0;
  numeric::KahanAccumulator acc;
  for (double s : samples) {
    double t = s;
    for (std::int64_t j = 1; j < k; ++j) t *= s;
    acc.add(t);
  }
  return acc.value() / static_cast<double>(samples.size());
}

double SamplePool::variance() const {
  if (samples.size() < 2) return 0.0;
  const auto mv = numeric::mean_var(samples.data(), samples.size());
  return mv.var;
}

SamplePool fixpoint_pool(const laws::EchoLaw& law, std::int64_t N,
                         std::int64_t generations, const rng::Tape& tape) {
  if (N < 1 || generations < 0)
    throw BadIndices("pool size must be positive, generations non-negative");
  SamplePool pool;
  pool.law = law.describe();
  pool.seed = tape.master_seed();
  pool.generations = generations;
  const double m1 = law.mean();
  if (!(law.xi_log_xi() < m1)) {
    pool.degenerate = true;
    pool.samples.assign(static_cast<std::size_t>(N), 0.0);
    return pool;
  }
  const double target = std::exp(-std::lgamma(1.0 + m1));
  pool.samples.assign(static_cast<std::size_t>(N), target);
  std::vector<double> next(pool.samples.size());
  const auto count = static_cast<std::uint64_t>(N);
  for (std::int64_t g = 0; g < generations; ++g) {
    const rng::Stream stream(tape, static_cast<std::uint64_t>(g));
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t step = i + 1;
      const double v = stream.u01(step, rng::kAux0);
      const double xi = law.sample(stream, step, rng::kEchoSlot);
      const double a = pool.samples[stream.pick(step, rng::kAux1, count)];
      const double b = pool.samples[stream.pick(step, rng::kAux2, count)];
      next[i] = std::pow(v, m1) * a + xi * std::pow(1.0 - v, m1) * b;
    }
    const double mean = pool_kahan_mean(next);
    if (mean > 0.0) {
      const double scale = target / mean;
      for (double& s : next) s *= scale;
    }
    pool.samples.swap(next);
  }
  return pool;
}

SamplePool component_pool(const laws::WalkParams& params, std::int64_t r,
                          const SamplePool& base, const rng::Tape& tape) {
  params.validate();
  if (r < 1) throw BadIndices("component index must be >= 1");
  if (base.samples.empty()) throw BadIndices("base pool is empty");
  SamplePool pool = base;
  pool.seed = tape.master_seed();
  if (r == 1 || base.degenerate) return pool;
  const double pm1 = params.p * params.echo.mean();
  const auto count = static_cast<std::uint64_t>(base.samples.size());
  const rng::Stream stream(tape, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t step = i + 1;
    if (stream.u01(step, rng::kEpsilonSlot) < params.p) {
      pool.samples[i] = 0.0;
      continue;
    }
    const double l = base.samples[stream.pick(step, rng::kAux1, count)];
    const double beta = urn::beta_r_sample(r, stream, step, rng::kAux0);
    pool.samples[i] = l * std::pow(beta, pm1);
  }
  return pool;
}

SamplePool series_limit_pool(const laws::WalkParams& params, std::int64_t R,
                             std::int64_t N, const rng::Tape& tape,
                             std::int64_t generations) {
  params.validate();
  if (R < 1 || N < 1) throw BadIndices("need R >= 1 and N >= 1");
  const double m1 = params.echo.mean();
  const double pm1 = params.p * m1;
  // At p = 1 only the first component survives, so no tail condition is
  // needed; below p = 1 the centered mode (p m1 <= 1) still requires
  // p m1 > 1/2 for the series to converge.
  const bool pure = params.p >= 1.0;
  if (!pure && !(pm1 > 0.5))
    throw HypothesisViolation("series limit needs p m1 > 1/2");
  const bool centered = !pure && pm1 <= 1.0 + 1e-12;

  SamplePool pool;
  pool.law = params.echo.describe();
  pool.seed = tape.master_seed();
  pool.generations = generations;
  if (!(params.echo.xi_log_xi() < m1)) {
    pool.degenerate = true;
    pool.samples.assign(static_cast<std::size_t>(N), 0.0);
    return pool;
  }

  const laws::EchoLaw compound =
      params.p < 1.0 ? laws::EchoLaw::thinned(params.echo, params.p)
                     : params.echo;
  const rng::Tape base_tape(
      numeric::splitmix64(tape.master_seed() + 0x9E3779B97F4A7C15ull));
  const SamplePool base = fixpoint_pool(compound, N, generations, base_tape);
  const auto count = static_cast<std::uint64_t>(N);

  std::vector<double> centering;
  if (centered) {
    const double ex = params.spin.mean();
    centering.resize(static_cast<std::size_t>(R) + 1, 0.0);
    for (std::int64_t r = 1; r <= R; ++r)
      centering[static_cast<std::size_t>(r)] =
          ex * analytic::limit_mean_component(params, r);
  }

  pool.samples.resize(static_cast<std::size_t>(N));
  for (std::uint64_t i = 0; i < count; ++i) {
    const rng::Stream stream(tape, kSeriesStreamBase + i);
    numeric::KahanAccumulator acc;
    for (std::int64_t r = 1; r <= R; ++r) {
      const auto step = static_cast<std::uint64_t>(r);
      double l = 0.0;
      const bool cut =
          r == 1 || !(stream.u01(step, rng::kEpsilonSlot) < params.p);
      if (cut) {
        l = base.samples[stream.pick(step, rng::kAux1, count)];
        if (r > 1) {
          const double beta = urn::beta_r_sample(r, stream, step, rng::kAux0);
          l *= std::pow(beta, pm1);
        }
      }
      const double x = params.spin.sample(stream, step, rng::kSpinSlot);
      double term = x * l;
      if (centered) term -= centering[static_cast<std::size_t>(r)];
      acc.add(term);
    }
    pool.samples[i] = acc.value();
  }

  // Discarded components r > R: sum_{r>R} Gamma(r)/Gamma(r+s) telescopes to
  // Gamma(R+1)/((s-1) Gamma(R+s)) for s > 1.
  if (params.p < 1.0) {
    if (!centered) {
      pool.tail_bound = params.spin.abs_moment(1.0) * (1.0 - params.p) /
                        (pm1 - 1.0) *
                        std::exp(std::lgamma(R + 1.0) - std::lgamma(R + pm1));
    } else {
      const auto lm = analytic::l_moments(compound, 2);
      if (lm.valid_k < 2)
        throw MomentCondition(
            "centered series needs the compound limit law in L2");
      const double second = params.spin.second_moment() * lm.values[1] *
                            (1.0 - params.p) *
                            std::exp(std::lgamma(1.0 + 2.0 * pm1)) /
                            (2.0 * pm1 - 1.0) *
                            std::exp(std::lgamma(R + 1.0) -
                                     std::lgamma(R + 2.0 * pm1));
      pool.tail_bound = std::sqrt(second);
    }
  }
  return pool;
}

namespace {

// Tabulated empirical characteristic function on a uniform grid with the
// analytic derivative at every knot, evaluated between knots by cubic
// Hermite interpolation. Conjugate symmetry supplies negative arguments.
class EcfTable {
 public:
  EcfTable(const std::vector<double>& samples, double x_max, double h)
      : h_(h) {
    const auto knots =
        static_cast<std::size_t>(std::ceil(x_max / h)) + 2;
    re_.assign(knots, 0.0);
    im_.assign(knots, 0.0);
    dre_.assign(knots, 0.0);
    dim_.assign(knots, 0.0);
    for (const double s : samples) {
      // e^{i x_j s} by rotation across the grid: one complex multiply per
      // knot instead of a sincos call.
      const double cr = std::cos(h * s);
      const double ci = std::sin(h * s);
      double wr = 1.0;
      double wi = 0.0;
      for (std::size_t j = 0; j < knots; ++j) {
        re_[j] += wr;
        im_[j] += wi;
        dre_[j] += -s * wi;  // d/dx Re e^{ixs} = -s sin(xs)
        dim_[j] += s * wr;
        const double nr = wr * cr - wi * ci;
        wi = wr * ci + wi * cr;
        wr = nr;
      }
    }
    const double inv = 1.0 / static_cast<double>(samples.size());
    for (std::size_t j = 0; j < knots; ++j) {
      re_[j] *= inv;
      im_[j] *= inv;
      dre_[j] *= inv;
      dim_[j] *= inv;
    }
  }

  std::complex<double> operator()(double x) const {
    if (x < 0.0) return std::conj((*this)(-x));
    std::size_t j = static_cast<std::size_t>(x / h_);
    if (j + 1 >= re_.size()) j = re_.size() - 2;
    const double t = x / h_ - static_cast<double>(j);
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    const double re = h00 * re_[j] + h10 * h_ * dre_[j] + h01 * re_[j + 1] +
                      h11 * h_ * dre_[j + 1];
    const double im = h00 * im_[j] + h10 * h_ * dim_[j] + h01 * im_[j + 1] +
                      h11 * h_ * dim_[j + 1];
    return {re, im};
  }

 private:
  double h_;
  std::vector<double> re_, im_, dre_, dim_;
};

}  // namespace

double ecf_residual(const SamplePool& pool, const laws::EchoLaw& law,
                    const std::vector<double>& t_grid, std::int64_t aux_draws,
                    const rng::Tape& tape) {
  if (pool.samples.empty() || t_grid.empty() || aux_draws < 1)
    throw BadIndices("ecf_residual needs a pool, a grid and draws");
  const double m1 = law.mean();
  const auto count = static_cast<std::uint64_t>(aux_draws);
  const rng::Stream stream(tape, 0);
  std::vector<double> left(count), right(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    const double v = stream.u01(k + 1, rng::kAux0);
    const double xi = law.sample(stream, k + 1, rng::kEchoSlot);
    left[k] = std::pow(v, m1);
    right[k] = xi * std::pow(1.0 - v, m1);
  }
  double t_abs = 0.0;
  for (double t : t_grid) t_abs = std::max(t_abs, std::abs(t));
  const double stretch =
      std::max(1.0, *std::max_element(right.begin(), right.end()));
  const EcfTable ecf(pool.samples, t_abs * stretch, 0.01);

  double worst = 0.0;
  const double inv = 1.0 / static_cast<double>(count);
  for (const double t : t_grid) {
    const std::complex<double> lhs = ecf(t);
    std::complex<double> rhs{0.0, 0.0};
    for (std::uint64_t k = 0; k < count; ++k)
      rhs += ecf(t * left[k]) * ecf(t * right[k]);
    worst = std::max(worst, std::abs(lhs - rhs * inv));
  }
  return worst;
}

}  // namespace ew::limits
