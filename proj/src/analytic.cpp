// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/analytic.hpp"

#include <cmath>
#include <limits>

#include "ew/errors.hpp"
#include "ew/numeric.hpp"

namespace ew::analytic {

namespace {

double log_gamma(double x) {
  if (!(x > 0.0)) throw OutOfDomain("log-gamma argument must be positive");
  return std::lgamma(x);
}

// Whether p m_q sits on the harmonic branch.
bool is_unit(double pmq) { return std::abs(pmq - 1.0) <= 1e-12; }

}  // namespace

double gamma_ratio(double n, double a, double b) {
  return std::exp(log_gamma(n + a) - log_gamma(n + b));
}

double gamma_sum(std::int64_t m, std::int64_t n, double a, double b) {
  if (m < 1 || m > n) throw BadIndices("gamma_sum needs 1 <= m <= n");
  if (std::abs(a - b) < 1e-14)
    throw EqualParameters("gamma_sum is singular at a = b");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double head = std::exp(log_gamma(md + a) - log_gamma(md + b));
  const double tail = std::exp(log_gamma(nd + 1.0 + a) - log_gamma(nd + 1.0 + b));
  return (head - tail) / (b - a);
}

namespace {

// Shared two-branch evaluation of sum_{k<=n} E X_k-moment for a generic
// per-step constant `step_const` (E|X|^q or the signed mean).
double moment_sum_core(double p, double mq, double step_const,
                       std::int64_t n) {
  const double pmq = p * mq;
  const double nd = static_cast<double>(n);
  if (is_unit(pmq))
    return nd * step_const * (p + (1.0 - p) * numeric::harmonic(n));
  // Gamma(n+pmq)/(n-1)! in log space.
  const double grow = std::exp(log_gamma(nd + pmq) - log_gamma(nd));
  return (step_const / (1.0 - pmq)) *
         ((1.0 - p) * nd +
          p * (1.0 - mq) / std::tgamma(1.0 + pmq) * grow);
}

}  // namespace

double expected_moment_sum(const laws::WalkParams& params, double q,
                           std::int64_t n) {
  params.validate();
  if (n < 1) throw BadIndices("horizon must be >= 1");
  const double mq = params.echo.moment(q);
  const double exq = params.spin.abs_moment(q);
  if (!std::isfinite(mq) || !std::isfinite(exq))
    throw OutOfMomentDomain("q outside the joint moment domain");
  return moment_sum_core(params.p, mq, exq, n);
}

double walk_mean(const laws::WalkParams& params, std::int64_t n) {
  params.validate();
  if (n < 1) throw BadIndices("horizon must be >= 1");
  return moment_sum_core(params.p, params.echo.moment(1.0),
                         params.spin.mean(), n);
}

AsymptoticMean asymptotic_mean_constant(const laws::WalkParams& params) {
  params.validate();
  AsymptoticMean out;
  const double m1 = params.echo.moment(1.0);
  const double ex = params.spin.mean();
  const double pm1 = params.p * m1;
  if (params.p == 1.0) {
    // Pure echo: E S~_n = EX Gamma(n+m1)/((n-1)! Gamma(1+m1)) exactly, so
    // the growth is n^{m1} in every regime.
    out.exponent = m1;
    out.constant = ex / std::tgamma(1.0 + m1);
    out.log_correction = false;
    return out;
  }
  if (is_unit(pm1)) {
    out.exponent = 1.0;
    out.constant = (1.0 - params.p) * ex;
    out.log_correction = true;
  } else if (pm1 > 1.0) {
    out.exponent = pm1;
    out.constant = ex / std::tgamma(1.0 + pm1) *
                   (1.0 + (1.0 - params.p) / (pm1 - 1.0));
  } else {
    out.exponent = 1.0;
    out.constant = (1.0 - params.p) * ex / (1.0 - pm1);
  }
  return out;
}

LimitMean limit_mean(const laws::WalkParams& params) {
  params.validate();
  LimitMean out;
  const double m1 = params.echo.moment(1.0);
  if (!(params.echo.xi_log_xi() < m1)) {
    out.degenerate = true;
    out.value = 0.0;
    return out;
  }
  const double pm1 = params.p * m1;
  if (params.p < 1.0 && !(pm1 > 1.0))
    throw HypothesisViolation(
        "rescaled-limit mean needs the supercritical regime when p < 1");
  const double ex = params.spin.mean();
  if (params.p == 1.0) {
    out.value = ex / std::tgamma(1.0 + m1);
  } else {
    out.value = ex / std::tgamma(1.0 + pm1) *
                (1.0 + (1.0 - params.p) / (pm1 - 1.0));
  }
  return out;
}

double limit_mean_component(const laws::WalkParams& params, std::int64_t r) {
  params.validate();
  if (r < 1) throw BadIndices("component index must be >= 1");
  const double pm1 = params.p * params.echo.moment(1.0);
  const double rd = static_cast<double>(r);
  const double keep = r > 1 ? 1.0 - params.p : 1.0;
  return keep * std::exp(log_gamma(rd) - log_gamma(rd + pm1));
}

LMoments l_moments(const laws::EchoLaw& law, int k) {
  if (k < 1) throw BadIndices("moment order must be >= 1");
  LMoments out;
  out.requested_k = k;
  const double m1 = law.moment(1.0);
  out.values.push_back(1.0 / std::tgamma(1.0 + m1));
  out.valid_k = 1;
  for (int j = 2; j <= k; ++j) {
    const double mj = law.moment(static_cast<double>(j));
    const double jd = static_cast<double>(j);
    if (!(mj < jd * m1)) break;  // moment condition fails from here on
    // Convolution recursion: the j-th moment is assembled from the lower
    // ones with Beta-function weights.
    double s = 0.0;
    double binom = 1.0;
    for (int i = 1; i <= j - 1; ++i) {
      binom = binom * static_cast<double>(j - i + 1) / static_cast<double>(i);
      const double mi = law.moment(static_cast<double>(i));
      s += binom * mi * std::tgamma(1.0 + i * m1) *
           std::tgamma(1.0 + (j - i) * m1) * out.values[i - 1] *
           out.values[j - i - 1];
    }
    const double val = s / (std::tgamma(1.0 + jd * m1) * (jd * m1 - mj));
    out.values.push_back(val);
    out.valid_k = j;
  }
  return out;
}

double ml_moment(double q, double a) {
  if (!(q > 0.0) || q > 1.0)
    throw OutOfDomain("Mittag-Leffler index must lie in (0, 1]");
  if (!(a > -1.0)) throw OutOfDomain("moment order must exceed -1");
  return std::exp(log_gamma(1.0 + a) - log_gamma(1.0 + q * a));
}

FactorizationCheck atom_factorization_check(const laws::EchoLaw& law, int k) {
  if (k < 1) throw BadIndices("moment order must be >= 1");
  const auto lhs_moments = l_moments(law, k);
  if (lhs_moments.valid_k < k)
    throw MomentCondition("moment condition fails before order " +
                          std::to_string(k) + "; largest valid k is " +
                          std::to_string(lhs_moments.valid_k));
  const auto stripped = law.strip_zero();
  const double p0 = stripped.mass_at_zero;
  FactorizationCheck out;
  out.lhs = lhs_moments.values[k - 1];
  if (p0 == 0.0) {
    out.rhs = out.lhs;
    return out;
  }
  const auto plus_moments = l_moments(stripped.positive, k);
  if (plus_moments.valid_k < k)
    throw MomentCondition("zero-free side fails before order " +
                          std::to_string(k) + "; largest valid k is " +
                          std::to_string(plus_moments.valid_k));
  const double m1 = law.moment(1.0);
  out.rhs = plus_moments.values[k - 1] *
            ml_moment(1.0 - p0, k * m1 / (1.0 - p0));
  return out;
}

}  // namespace ew::analytic
