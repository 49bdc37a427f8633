// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "ew/laws.hpp"

namespace ew::analytic {

// Closed-form layer: every explicitly solvable quantity of the model,
// evaluated stably in log-space so n up to 1e6 with fractional offsets
// stays accurate.

// Gamma(n+a)/Gamma(n+b) via a log-gamma difference; n+a, n+b > 0.
double gamma_ratio(double n, double a, double b);

// sum_{i=m}^{n} Gamma(i+a)/Gamma(i+1+b)
//   = (1/(b-a)) [Gamma(m+a)/Gamma(m+b) - Gamma(n+1+a)/Gamma(n+1+b)].
// Throws EqualParameters when |a-b| < 1e-14 and BadIndices unless
// 1 <= m <= n.
double gamma_sum(std::int64_t m, std::int64_t n, double a, double b);

// sum_{k<=n} E|X~_k|^q, the two-branch closed form: a gamma-ratio branch
// for p m_q != 1 and a harmonic-sum branch at p m_q = 1.
double expected_moment_sum(const laws::WalkParams& params, double q,
                           std::int64_t n);

// E S~_n exactly, for every regime and any signed spin mean. Same shape as
// expected_moment_sum at q = 1 with the signed mean in place of E|X|.
double walk_mean(const laws::WalkParams& params, std::int64_t n);

struct AsymptoticMean {
  double exponent = 0.0;
  double constant = 0.0;
  bool log_correction = false;
};

// Leading-order growth of E S~_n: (exponent, constant, log flag) with
// E S~_n ~ constant * n^exponent (times log n when flagged).
AsymptoticMean asymptotic_mean_constant(const laws::WalkParams& params);

struct LimitMean {
  double value = 0.0;
  bool degenerate = false;  // set when E[xi log xi] >= m1 (limit is 0 a.s.)
};

// Mean of the almost-sure limit of the rescaled walk: EX/Gamma(1+m1) for
// the pure-echo process, the supercritical constant for p < 1. Throws
// HypothesisViolation for p < 1 outside the supercritical regime.
LimitMean limit_mean(const laws::WalkParams& params);

// Mean of the r-th component limit: (1 - p 1{r>1}) (r-1)!/Gamma(r+pm1).
// Normalised for unit spins; the fresh-spin mean does not enter.
double limit_mean_component(const laws::WalkParams& params, std::int64_t r);

struct LMoments {
  std::vector<double> values;  // E L^1 .. E L^valid_k
  int requested_k = 0;
  int valid_k = 0;  // largest k with m_j < j m1 for all 2 <= j <= k
};

// Integer moments of the pure-echo limit law by the convolution recursion;
// truncates (rather than throws) at the largest order whose moment
// condition holds.
LMoments l_moments(const laws::EchoLaw& law, int k);

// Moment of the Mittag-Leffler factor: Gamma(1+a)/Gamma(1+q a) for
// q in (0, 1] and a > -1.
double ml_moment(double q, double a);

struct FactorizationCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

// Both sides of the atom factorisation at moment order k: the limit law of
// an echo with an atom at zero equals (in law) the zero-free limit times an
// independent Mittag-Leffler factor. Sides are computed through independent
// paths, so agreement is a real consistency check.
FactorizationCheck atom_factorization_check(const laws::EchoLaw& law, int k);

}  // namespace ew::analytic
