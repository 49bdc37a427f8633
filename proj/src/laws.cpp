// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/laws.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "ew/errors.hpp"
#include "ew/numeric.hpp"

namespace ew::laws {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEulerGamma = 0.57721566490153286;

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

std::string fmt_num(double x) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, r.ptr);
}

}  // namespace

// ---------------------------------------------------------------------------
// EchoLaw constructors

EchoLaw EchoLaw::constant(double c) {
  if (!(c >= 0.0)) throw HypothesisViolation("echo support must be >= 0");
  if (c == 0.0)
    throw HypothesisViolation("echo law concentrated at zero is excluded");
  return EchoLaw(ConstantRep{c});
}

EchoLaw EchoLaw::bernoulli(double q) {
  if (!(q > 0.0) || q > 1.0)
    throw HypothesisViolation("bernoulli echo mass must lie in (0, 1]");
  return EchoLaw(BernoulliRep{q});
}

EchoLaw EchoLaw::discrete(std::vector<double> values,
                          std::vector<double> probs) {
  if (values.empty() || values.size() != probs.size())
    throw HypothesisViolation("discrete law needs matching value/prob lists");
  double total = 0.0, zero_mass = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0))
      throw HypothesisViolation("echo support must be >= 0");
    if (!(probs[i] >= 0.0))
      throw HypothesisViolation("probabilities must be >= 0");
    total += probs[i];
    if (values[i] == 0.0) zero_mass += probs[i];
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw HypothesisViolation("probabilities must sum to 1 within 1e-12");
  if (zero_mass >= 1.0 - 1e-12)
    throw HypothesisViolation("echo law concentrated at zero is excluded");
  return EchoLaw(DiscreteRep{std::move(values), std::move(probs)});
}

EchoLaw EchoLaw::exponential(double rate) {
  if (!(rate > 0.0)) throw HypothesisViolation("exponential rate must be > 0");
  return EchoLaw(ExponentialRep{rate});
}

EchoLaw EchoLaw::log_normal(double mu, double sigma) {
  if (!(sigma >= 0.0)) throw HypothesisViolation("lognormal sigma must be >= 0");
  return EchoLaw(LogNormalRep{mu, sigma});
}

EchoLaw EchoLaw::uniform(double a, double b) {
  if (!(a >= 0.0)) throw HypothesisViolation("echo support must be >= 0");
  if (!(a < b)) throw HypothesisViolation("uniform law needs a < b");
  return EchoLaw(UniformRep{a, b});
}

EchoLaw EchoLaw::scaled(EchoLaw inner, double factor) {
  if (!(factor > 0.0)) throw HypothesisViolation("scale factor must be > 0");
  return EchoLaw(ScaledRep{std::make_shared<EchoLaw>(std::move(inner)), factor});
}

EchoLaw EchoLaw::thinned(EchoLaw inner, double keep) {
  if (!(keep > 0.0) || keep > 1.0)
    throw HypothesisViolation("thinning probability must lie in (0, 1]");
  return EchoLaw(ThinnedRep{std::make_shared<EchoLaw>(std::move(inner)), keep});
}

EchoLaw::Family EchoLaw::family() const {
  return std::visit(
      Overload{[](const ConstantRep&) { return Family::kConstant; },
               [](const BernoulliRep&) { return Family::kBernoulli; },
               [](const DiscreteRep&) { return Family::kDiscrete; },
               [](const ExponentialRep&) { return Family::kExponential; },
               [](const LogNormalRep&) { return Family::kLogNormal; },
               [](const UniformRep&) { return Family::kUniform; },
               [](const ScaledRep&) { return Family::kScaled; },
               [](const ThinnedRep&) { return Family::kThinned; }},
      rep_);
}

// ---------------------------------------------------------------------------
// Moments

double EchoLaw::moment(double gamma) const {
  if (gamma == 0.0) return 1.0;
  if (gamma < 0.0 && mass_at_zero() > 0.0)
    throw NegativeMomentOfAtomAtZero(
        "negative order with P(xi=0) > 0 has an infinite moment");
  return std::visit(
      Overload{
          [&](const ConstantRep& r) { return std::pow(r.c, gamma); },
          [&](const BernoulliRep& r) { return r.q > 0.0 ? r.q : 0.0; },
          [&](const DiscreteRep& r) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.v.size(); ++i)
              if (r.v[i] > 0.0) s += r.p[i] * std::pow(r.v[i], gamma);
            return s;
          },
          [&](const ExponentialRep& r) {
            if (gamma <= -1.0) return kInf;
            return std::tgamma(1.0 + gamma) * std::pow(r.rate, -gamma);
          },
          [&](const LogNormalRep& r) {
            return std::exp(gamma * r.mu +
                            0.5 * gamma * gamma * r.sigma * r.sigma);
          },
          [&](const UniformRep& r) {
            if (r.a == 0.0 && gamma <= -1.0) return kInf;
            if (gamma == -1.0)
              return (std::log(r.b) - std::log(r.a)) / (r.b - r.a);
            const double num = std::pow(r.b, gamma + 1.0) -
                               (r.a > 0.0 ? std::pow(r.a, gamma + 1.0) : 0.0);
            return num / ((gamma + 1.0) * (r.b - r.a));
          },
          [&](const ScaledRep& r) {
            return std::pow(r.factor, gamma) * r.inner->moment(gamma);
          },
          [&](const ThinnedRep& r) {
            return r.keep * r.inner->moment(gamma);
          }},
      rep_);
}

double EchoLaw::xi_log_xi() const {
  return std::visit(
      Overload{
          [](const ConstantRep& r) { return r.c * std::log(r.c); },
          [](const BernoulliRep&) { return 0.0; },
          [](const DiscreteRep& r) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.v.size(); ++i)
              if (r.v[i] > 0.0) s += r.p[i] * r.v[i] * std::log(r.v[i]);
            return s;
          },
          [](const ExponentialRep& r) {
            return (1.0 - kEulerGamma - std::log(r.rate)) / r.rate;
          },
          [](const LogNormalRep& r) {
            const double s2 = r.sigma * r.sigma;
            return (r.mu + s2) * std::exp(r.mu + 0.5 * s2);
          },
          [](const UniformRep& r) {
            // Antiderivative of x log x is x^2 (2 log x - 1) / 4.
            auto F = [](double x) {
              return x == 0.0 ? 0.0 : x * x * (2.0 * std::log(x) - 1.0) / 4.0;
            };
            return (F(r.b) - F(r.a)) / (r.b - r.a);
          },
          [](const ScaledRep& r) {
            return r.factor * std::log(r.factor) * r.inner->moment(1.0) +
                   r.factor * r.inner->xi_log_xi();
          },
          [](const ThinnedRep& r) { return r.keep * r.inner->xi_log_xi(); }},
      rep_);
}

double EchoLaw::mass_at_zero() const {
  return std::visit(
      Overload{[](const ConstantRep&) { return 0.0; },
               [](const BernoulliRep& r) { return 1.0 - r.q; },
               [](const DiscreteRep& r) {
                 double s = 0.0;
                 for (std::size_t i = 0; i < r.v.size(); ++i)
                   if (r.v[i] == 0.0) s += r.p[i];
                 return s;
               },
               [](const ExponentialRep&) { return 0.0; },
               [](const LogNormalRep&) { return 0.0; },
               [](const UniformRep&) { return 0.0; },
               [](const ScaledRep& r) { return r.inner->mass_at_zero(); },
               [](const ThinnedRep& r) {
                 return 1.0 - r.keep * (1.0 - r.inner->mass_at_zero());
               }},
      rep_);
}

bool EchoLaw::is_constant_one() const {
  if (mass_at_zero() != 0.0) return false;
  return std::abs(moment(1.0) - 1.0) < 1e-15 &&
         std::abs(moment(2.0) - 1.0) < 1e-15;
}

EchoLaw::ZeroStripped EchoLaw::strip_zero() const {
  const double p0 = mass_at_zero();
  if (p0 == 0.0) return {*this, 0.0};
  return std::visit(
      Overload{
          [&](const BernoulliRep&) -> ZeroStripped {
            return {EchoLaw::constant(1.0), p0};
          },
          [&](const DiscreteRep& r) -> ZeroStripped {
            std::vector<double> v, p;
            for (std::size_t i = 0; i < r.v.size(); ++i) {
              if (r.v[i] > 0.0) {
                v.push_back(r.v[i]);
                p.push_back(r.p[i] / (1.0 - p0));
              }
            }
            // Renormalisation can leave the sum 1+- a few ulp; repair it.
            double total = 0.0;
            for (double x : p) total += x;
            for (double& x : p) x /= total;
            return {EchoLaw::discrete(std::move(v), std::move(p)), p0};
          },
          [&](const ScaledRep& r) -> ZeroStripped {
            auto in = r.inner->strip_zero();
            return {EchoLaw::scaled(std::move(in.positive), r.factor), p0};
          },
          [&](const ThinnedRep& r) -> ZeroStripped {
            return {r.inner->strip_zero().positive, p0};
          },
          [&](const auto&) -> ZeroStripped { return {*this, 0.0}; }},
      rep_);
}

EchoLaw::FiniteSupport EchoLaw::finite_support() const {
  return std::visit(
      Overload{
          [&](const ConstantRep& r) -> FiniteSupport {
            return {{r.c}, {1.0}, true};
          },
          [&](const BernoulliRep& r) -> FiniteSupport {
            return {{0.0, 1.0}, {1.0 - r.q, r.q}, true};
          },
          [&](const DiscreteRep& r) -> FiniteSupport {
            return {r.v, r.p, true};
          },
          [&](const ScaledRep& r) -> FiniteSupport {
            auto in = r.inner->finite_support();
            if (!in.finite) return {};
            for (double& v : in.values) v *= r.factor;
            return in;
          },
          [&](const ThinnedRep& r) -> FiniteSupport {
            auto in = r.inner->finite_support();
            if (!in.finite) return {};
            FiniteSupport out;
            out.finite = true;
            out.values.push_back(0.0);
            out.probs.push_back(1.0 - r.keep);
            for (std::size_t i = 0; i < in.values.size(); ++i) {
              if (in.values[i] == 0.0) {
                out.probs[0] += r.keep * in.probs[i];
              } else {
                out.values.push_back(in.values[i]);
                out.probs.push_back(r.keep * in.probs[i]);
              }
            }
            return out;
          },
          [&](const auto&) -> FiniteSupport { return {}; }},
      rep_);
}

double EchoLaw::sample(const rng::Stream& s, std::uint64_t step,
                       std::uint32_t slot, std::uint32_t idx) const {
  return std::visit(
      Overload{
          [&](const ConstantRep& r) { return r.c; },
          [&](const BernoulliRep& r) {
            return s.u01(step, slot, idx) < r.q ? 1.0 : 0.0;
          },
          [&](const DiscreteRep& r) {
            const double u = s.u01(step, slot, idx);
            double cum = 0.0;
            for (std::size_t i = 0; i + 1 < r.v.size(); ++i) {
              cum += r.p[i];
              if (u < cum) return r.v[i];
            }
            return r.v.back();
          },
          [&](const ExponentialRep& r) {
            return s.exponential(step, slot, r.rate, idx);
          },
          [&](const LogNormalRep& r) {
            return std::exp(r.mu + r.sigma * s.normal(step, slot, idx));
          },
          [&](const UniformRep& r) {
            return r.a + (r.b - r.a) * s.u01(step, slot, idx);
          },
          [&](const ScaledRep& r) {
            return r.factor * r.inner->sample(s, step, slot, idx);
          },
          [&](const ThinnedRep& r) {
            if (s.u01(step, slot, idx) >= r.keep) return 0.0;
            return r.inner->sample(s, step, slot, idx + 1);
          }},
      rep_);
}

std::string EchoLaw::describe() const {
  return std::visit(
      Overload{
          [](const ConstantRep& r) { return "const:" + fmt_num(r.c); },
          [](const BernoulliRep& r) { return "bernoulli:" + fmt_num(r.q); },
          [](const DiscreteRep& r) {
            std::string out = "discrete:";
            for (std::size_t i = 0; i < r.v.size(); ++i) {
              if (i) out += ',';
              out += fmt_num(r.v[i]) + "@" + fmt_num(r.p[i]);
            }
            return out;
          },
          [](const ExponentialRep& r) { return "exp:" + fmt_num(r.rate); },
          [](const LogNormalRep& r) {
            return "lognormal:" + fmt_num(r.mu) + "," + fmt_num(r.sigma);
          },
          [](const UniformRep& r) {
            return "uniform:" + fmt_num(r.a) + "," + fmt_num(r.b);
          },
          [](const ScaledRep& r) {
            return "scaled:" + fmt_num(r.factor) + "*" + r.inner->describe();
          },
          [](const ThinnedRep& r) {
            return "thinned:" + fmt_num(r.keep) + "*" + r.inner->describe();
          }},
      rep_);
}

// ---------------------------------------------------------------------------
// SpinLaw

SpinLaw SpinLaw::constant(double c) {
  if (c == 0.0)
    throw HypothesisViolation("spin law concentrated at zero is excluded");
  return SpinLaw(ConstantRep{c});
}

SpinLaw SpinLaw::rademacher() { return SpinLaw(RademacherRep{}); }

SpinLaw SpinLaw::normal(double mu, double sigma) {
  if (!(sigma >= 0.0)) throw HypothesisViolation("normal sigma must be >= 0");
  if (sigma == 0.0 && mu == 0.0)
    throw HypothesisViolation("spin law concentrated at zero is excluded");
  return SpinLaw(NormalRep{mu, sigma});
}

SpinLaw SpinLaw::uniform(double a, double b) {
  if (!(a < b)) throw HypothesisViolation("uniform law needs a < b");
  return SpinLaw(UniformRep{a, b});
}

SpinLaw SpinLaw::exponential(double rate) {
  if (!(rate > 0.0)) throw HypothesisViolation("exponential rate must be > 0");
  return SpinLaw(ExponentialRep{rate});
}

SpinLaw::Family SpinLaw::family() const {
  return std::visit(
      Overload{[](const ConstantRep&) { return Family::kConstant; },
               [](const RademacherRep&) { return Family::kRademacher; },
               [](const NormalRep&) { return Family::kNormal; },
               [](const UniformRep&) { return Family::kUniform; },
               [](const ExponentialRep&) { return Family::kExponential; }},
      rep_);
}

double SpinLaw::mean() const {
  return std::visit(
      Overload{[](const ConstantRep& r) { return r.c; },
               [](const RademacherRep&) { return 0.0; },
               [](const NormalRep& r) { return r.mu; },
               [](const UniformRep& r) { return 0.5 * (r.a + r.b); },
               [](const ExponentialRep& r) { return 1.0 / r.rate; }},
      rep_);
}

double SpinLaw::second_moment() const {
  return std::visit(
      Overload{[](const ConstantRep& r) { return r.c * r.c; },
               [](const RademacherRep&) { return 1.0; },
               [](const NormalRep& r) { return r.mu * r.mu + r.sigma * r.sigma; },
               [](const UniformRep& r) {
                 return (r.a * r.a + r.a * r.b + r.b * r.b) / 3.0;
               },
               [](const ExponentialRep& r) { return 2.0 / (r.rate * r.rate); }},
      rep_);
}

double SpinLaw::abs_moment(double q) const {
  if (q == 0.0) return 1.0;
  if (!(q > 0.0)) throw OutOfMomentDomain("abs moment needs order >= 0");
  return std::visit(
      Overload{
          [&](const ConstantRep& r) { return std::pow(std::abs(r.c), q); },
          [&](const RademacherRep&) { return 1.0; },
          [&](const NormalRep& r) -> double {
            if (q == 2.0) return r.mu * r.mu + r.sigma * r.sigma;
            if (r.mu == 0.0) {
              // E|Z|^q for centred normal: sigma^q 2^{q/2} G((q+1)/2)/sqrt(pi).
              return std::pow(r.sigma, q) * std::pow(2.0, 0.5 * q) *
                     std::tgamma(0.5 * (q + 1.0)) /
                     std::sqrt(3.14159265358979323846);
            }
            const double mu = r.mu, sg = r.sigma;
            if (sg == 0.0) return std::pow(std::abs(mu), q);
            auto dens = [mu, sg, q](double x) {
              const double z = (x - mu) / sg;
              return std::pow(std::abs(x), q) *
                     std::exp(-0.5 * z * z) /
                     (sg * std::sqrt(2.0 * 3.14159265358979323846));
            };
            return numeric::integrate(dens, mu - 12.0 * sg, mu + 12.0 * sg,
                                      1e-11);
          },
          [&](const UniformRep& r) -> double {
            const double w = r.b - r.a;
            auto seg = [&](double lo, double hi) {
              return (std::pow(hi, q + 1.0) - std::pow(lo, q + 1.0)) /
                     (q + 1.0);
            };
            if (r.a >= 0.0) return seg(r.a, r.b) / w;
            if (r.b <= 0.0) return seg(-r.b, -r.a) / w;
            return (seg(0.0, -r.a) + seg(0.0, r.b)) / w;
          },
          [&](const ExponentialRep& r) {
            return std::tgamma(1.0 + q) * std::pow(r.rate, -q);
          }},
      rep_);
}

double SpinLaw::sample(const rng::Stream& s, std::uint64_t step,
                       std::uint32_t slot, std::uint32_t idx) const {
  return std::visit(
      Overload{[&](const ConstantRep& r) { return r.c; },
               [&](const RademacherRep&) {
                 return s.u01(step, slot, idx) < 0.5 ? -1.0 : 1.0;
               },
               [&](const NormalRep& r) {
                 return r.mu + r.sigma * s.normal(step, slot, idx);
               },
               [&](const UniformRep& r) {
                 return r.a + (r.b - r.a) * s.u01(step, slot, idx);
               },
               [&](const ExponentialRep& r) {
                 return s.exponential(step, slot, r.rate, idx);
               }},
      rep_);
}

std::string SpinLaw::describe() const {
  return std::visit(
      Overload{[](const ConstantRep& r) { return "const:" + fmt_num(r.c); },
               [](const RademacherRep&) { return std::string("rademacher"); },
               [](const NormalRep& r) {
                 return "normal:" + fmt_num(r.mu) + "," + fmt_num(r.sigma);
               },
               [](const UniformRep& r) {
                 return "uniform:" + fmt_num(r.a) + "," + fmt_num(r.b);
               },
               [](const ExponentialRep& r) { return "exp:" + fmt_num(r.rate); }},
      rep_);
}

// ---------------------------------------------------------------------------
// WalkParams / phi / classify

void WalkParams::validate() const {
  if (!(p > 0.0) || p > 1.0)
    throw DegenerateModel("retention probability must lie in (0, 1]");
}

double phi(const EchoLaw& law, double theta, double r) {
  if (!(r > 0.0)) throw OutOfDomain("phi needs r > 0");
  double m;
  try {
    m = law.moment(r * theta);
  } catch (const NegativeMomentOfAtomAtZero&) {
    throw OutOfMomentDomain("r*theta lies below the moment domain");
  }
  if (std::isinf(m)) throw OutOfMomentDomain("moment diverges at r*theta");
  return m / r;
}

namespace {

double golden_min(const std::function<double(double)>& f, double a, double b,
                  double rel_tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > rel_tol * (std::abs(a) + std::abs(b)) * 0.5 + 1e-300) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double phi_minimizer(const EchoLaw& law, double theta) {
  if (theta == 0.0)
    throw OutOfMomentDomain("theta must be interior to the moment domain");
  try {
    if (std::isinf(law.moment(theta)))
      throw OutOfMomentDomain("theta outside the moment domain");
  } catch (const NegativeMomentOfAtomAtZero&) {
    throw OutOfMomentDomain("theta outside the moment domain");
  }
  auto g = [&](double r) -> double {
    try {
      return phi(law, theta, r);
    } catch (const Error&) {
      return kInf;  // outside the domain; convexity keeps the min left of it
    }
  };
  // Coarse doubling grid; phi -> inf as r -> 0+, so only the right edge can
  // hide the minimum.
  int best_k = -6;
  double best = g(std::ldexp(1.0, -6));
  for (int k = -5; k <= 40; ++k) {
    const double v = g(std::ldexp(1.0, k));
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  if (best_k == 40) return kInf;
  const double lo = std::ldexp(1.0, best_k - 1);
  const double hi = std::ldexp(1.0, best_k + 1);
  return golden_min(g, lo, hi, 1e-8);
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kSupercritical:
      return "supercritical";
    case Regime::kCritical:
      return "critical";
    case Regime::kSubcritical:
      return "subcritical";
  }
  return "unknown";
}

namespace {

// sup{gamma > 1 : m_gamma < gamma m1}; +inf when the inequality never
// reverses, 1 when the set is empty.
double lambda_sup_of(const EchoLaw& law, double m1, bool ui_holds) {
  if (!ui_holds) return 1.0;
  auto h = [&](double gamma) -> double {
    double m;
    try {
      m = law.moment(gamma);
    } catch (const Error&) {
      return kInf;
    }
    return m - gamma * m1;
  };
  double lo = 1.0 + 1e-9;
  if (!(h(lo) < 0.0)) {
    // The strict inequality opens slightly further right for flat laws.
    lo = 1.0 + 1e-4;
    if (!(h(lo) < 0.0)) return 1.0;
  }
  double hi = 2.0;
  while (h(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) return kInf;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RegimeReport classify(const WalkParams& params) {
  params.validate();
  RegimeReport rep;
  const double m1 = params.echo.moment(1.0);
  const double ex = params.spin.mean();
  rep.pm1 = params.p * m1;
  if (std::abs(rep.pm1 - 1.0) <= 1e-12)
    rep.regime = Regime::kCritical;
  else if (rep.pm1 > 1.0)
    rep.regime = Regime::kSupercritical;
  else
    rep.regime = Regime::kSubcritical;
  rep.xi_log_xi = params.echo.xi_log_xi();
  rep.ui_holds = rep.xi_log_xi < m1;
  rep.lambda_nonempty = rep.ui_holds;
  rep.lambda_sup = lambda_sup_of(params.echo, m1, rep.ui_holds);
  if (rep.regime == Regime::kSubcritical) {
    // Spin laws in the registry have every positive moment finite, so the
    // joint-domain requirement reduces to the echo side.
    const double gamma_star = 1.0 / rep.pm1;
    double mg;
    try {
      mg = params.echo.moment(gamma_star);
    } catch (const Error&) {
      mg = kInf;
    }
    rep.subcritical_refined = std::isfinite(mg) && params.p * mg < 1.0;
  }
  switch (rep.regime) {
    case Regime::kSupercritical:
      rep.limit_constant = ex / std::tgamma(1.0 + rep.pm1) *
                           (1.0 + (1.0 - params.p) / (rep.pm1 - 1.0));
      break;
    case Regime::kCritical:
      rep.limit_constant = (1.0 - params.p) * ex;
      break;
    case Regime::kSubcritical:
      rep.limit_constant = (1.0 - params.p) * ex / (1.0 - rep.pm1);
      break;
  }
  rep.scaling_exponent = params.p == 1.0 ? m1 : std::max(rep.pm1, 1.0);
  return rep;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

double parse_num(const std::string& tok) {
  double value = 0.0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  const auto r = std::from_chars(begin, end, value);
  if (r.ec != std::errc() || r.ptr != end)
    throw ParseError("bad number '" + tok + "' in law expression");
  return value;
}

struct LawExpr {
  std::string fam;
  std::vector<std::string> args;
};

LawExpr parse_expr(const std::string& text) {
  LawExpr e;
  const std::size_t colon = text.find(':');
  e.fam = text.substr(0, colon);
  if (colon != std::string::npos) e.args = split(text.substr(colon + 1), ',');
  return e;
}

void need_args(const LawExpr& e, std::size_t n) {
  if (e.args.size() != n)
    throw ParseError("law '" + e.fam + "' expects " + std::to_string(n) +
                     " parameter(s)");
}

}  // namespace

EchoLaw parse_echo_law(const std::string& text) {
  const LawExpr e = parse_expr(text);
  try {
    if (e.fam == "const") {
      need_args(e, 1);
      return EchoLaw::constant(parse_num(e.args[0]));
    }
    if (e.fam == "bernoulli") {
      need_args(e, 1);
      return EchoLaw::bernoulli(parse_num(e.args[0]));
    }
    if (e.fam == "discrete") {
      if (e.args.empty()) throw ParseError("discrete law needs atoms");
      std::vector<double> v, p;
      for (const auto& pair : e.args) {
        const auto at = pair.find('@');
        if (at == std::string::npos)
          throw ParseError("discrete atom must look like value@prob");
        v.push_back(parse_num(pair.substr(0, at)));
        p.push_back(parse_num(pair.substr(at + 1)));
      }
      return EchoLaw::discrete(std::move(v), std::move(p));
    }
    if (e.fam == "exp") {
      need_args(e, 1);
      return EchoLaw::exponential(parse_num(e.args[0]));
    }
    if (e.fam == "lognormal") {
      need_args(e, 2);
      return EchoLaw::log_normal(parse_num(e.args[0]), parse_num(e.args[1]));
    }
    if (e.fam == "uniform") {
      need_args(e, 2);
      return EchoLaw::uniform(parse_num(e.args[0]), parse_num(e.args[1]));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(std::string("invalid echo law: ") + err.what());
  }
  throw ParseError("unknown echo law family '" + e.fam + "'");
}

SpinLaw parse_spin_law(const std::string& text) {
  const LawExpr e = parse_expr(text);
  try {
    if (e.fam == "const") {
      need_args(e, 1);
      return SpinLaw::constant(parse_num(e.args[0]));
    }
    if (e.fam == "rademacher") {
      if (!e.args.empty()) throw ParseError("rademacher takes no parameters");
      return SpinLaw::rademacher();
    }
    if (e.fam == "normal") {
      need_args(e, 2);
      return SpinLaw::normal(parse_num(e.args[0]), parse_num(e.args[1]));
    }
    if (e.fam == "uniform") {
      need_args(e, 2);
      return SpinLaw::uniform(parse_num(e.args[0]), parse_num(e.args[1]));
    }
    if (e.fam == "exp") {
      need_args(e, 1);
      return SpinLaw::exponential(parse_num(e.args[0]));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(std::string("invalid spin law: ") + err.what());
  }
  throw ParseError("unknown spin law family '" + e.fam + "'");
}

}  // namespace ew::laws
