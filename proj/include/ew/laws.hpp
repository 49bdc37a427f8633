// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ew/rng.hpp"

namespace ew::laws {

// Echo law: the nonnegative factor applied to a recalled step. Constructors
// enforce the support and normalisation invariants; in particular the law
// may not sit entirely at zero. Every family exposes exact closed-form
// moments, so simulation output can always be checked against analytics
// without further numerics.
class EchoLaw {
 public:
  enum class Family {
    kConstant,
    kBernoulli,
    kDiscrete,
    kExponential,
    kLogNormal,
    kUniform,
    kScaled,
    kThinned,
  };

  static EchoLaw constant(double c);
  static EchoLaw bernoulli(double q);
  static EchoLaw discrete(std::vector<double> values,
                          std::vector<double> probs);
  static EchoLaw exponential(double rate);
  static EchoLaw log_normal(double mu, double sigma);
  static EchoLaw uniform(double a, double b);
  static EchoLaw scaled(EchoLaw inner, double factor);
  // Keep the inner draw with probability `keep`, otherwise zero. Not part
  // of the CLI grammar; used to express a retention-thinned echo when the
  // per-vertex limits are assembled.
  static EchoLaw thinned(EchoLaw inner, double keep);

  Family family() const;

  // m_gamma = E xi^gamma. Exact closed form per family; +inf where the
  // moment diverges. gamma < 0 with an atom at zero throws.
  double moment(double gamma) const;
  double mean() const { return moment(1.0); }

  // E[xi log xi], with 0 log 0 = 0.
  double xi_log_xi() const;

  double mass_at_zero() const;

  // True when the law is xi = 1 almost surely (any representation).
  bool is_constant_one() const;

  // Law of xi conditioned on xi > 0, together with P(xi = 0).
  struct ZeroStripped;
  ZeroStripped strip_zero() const;

  // Atom decomposition (values, probabilities) for laws with finite
  // support, including scaled/thinned wrappers of such laws; empty vectors
  // for continuous families.
  struct FiniteSupport {
    std::vector<double> values;
    std::vector<double> probs;
    bool finite = false;
  };
  FiniteSupport finite_support() const;

  // Draws consume the block at (step, slot, idx); the thinned wrapper also
  // consumes idx+1 for its inner law.
  double sample(const rng::Stream& s, std::uint64_t step, std::uint32_t slot,
                std::uint32_t idx = 0) const;

  // Canonical grammar string for the grammar families; descriptive text
  // for scaled/thinned wrappers.
  std::string describe() const;

 private:
  struct ConstantRep {
    double c;
  };
  struct BernoulliRep {
    double q;
  };
  struct DiscreteRep {
    std::vector<double> v;
    std::vector<double> p;
  };
  struct ExponentialRep {
    double rate;
  };
  struct LogNormalRep {
    double mu, sigma;
  };
  struct UniformRep {
    double a, b;
  };
  struct ScaledRep {
    std::shared_ptr<const EchoLaw> inner;
    double factor;
  };
  struct ThinnedRep {
    std::shared_ptr<const EchoLaw> inner;
    double keep;
  };
  using Rep = std::variant<ConstantRep, BernoulliRep, DiscreteRep,
                           ExponentialRep, LogNormalRep, UniformRep, ScaledRep,
                           ThinnedRep>;
  explicit EchoLaw(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

struct EchoLaw::ZeroStripped {
  EchoLaw positive;
  double mass_at_zero;
};

// Spin law: the law of a fresh step. May be signed; must not sit entirely
// at zero.
class SpinLaw {
 public:
  enum class Family {
    kConstant,
    kRademacher,
    kNormal,
    kUniform,
    kExponential,
  };

  static SpinLaw constant(double c);
  static SpinLaw rademacher();
  static SpinLaw normal(double mu, double sigma);
  static SpinLaw uniform(double a, double b);
  static SpinLaw exponential(double rate);

  Family family() const;
  double mean() const;
  double second_moment() const;
  // E|X|^q; closed form for the common cases, quadrature otherwise.
  double abs_moment(double q) const;
  double sample(const rng::Stream& s, std::uint64_t step, std::uint32_t slot,
                std::uint32_t idx = 0) const;
  std::string describe() const;

 private:
  struct ConstantRep {
    double c;
  };
  struct RademacherRep {};
  struct NormalRep {
    double mu, sigma;
  };
  struct UniformRep {
    double a, b;
  };
  struct ExponentialRep {
    double rate;
  };
  using Rep = std::variant<ConstantRep, RademacherRep, NormalRep, UniformRep,
                           ExponentialRep>;
  explicit SpinLaw(Rep rep) : rep_(rep) {}
  Rep rep_;
};

// Full parameter triple of an echoed walk: retention probability p, echo
// law, spin law.
struct WalkParams {
  double p = 1.0;
  EchoLaw echo = EchoLaw::constant(1.0);
  SpinLaw spin = SpinLaw::constant(1.0);
  // Throws DegenerateModel for excluded corners (p outside (0,1]).
  void validate() const;
};

// phi_theta(r) = m_{r theta} / r, strictly convex on the moment domain.
double phi(const EchoLaw& law, double theta, double r);

// Interior minimiser of phi_theta over r in (0, inf); +inf when phi_theta
// decreases throughout, relative tolerance 1e-8.
double phi_minimizer(const EchoLaw& law, double theta);

enum class Regime { kSupercritical, kCritical, kSubcritical };

struct RegimeReport {
  double pm1 = 0.0;
  Regime regime = Regime::kSubcritical;
  double xi_log_xi = 0.0;
  bool ui_holds = false;        // E[xi log xi] < m1
  bool lambda_nonempty = false; // equivalent to ui_holds
  double lambda_sup = 1.0;      // sup{gamma>1 : m_gamma < gamma m1}, else 1
  bool subcritical_refined = false;
  double limit_constant = 0.0;  // regime constant for the mean growth
  double scaling_exponent = 0.0;
};

RegimeReport classify(const WalkParams& params);

const char* regime_name(Regime r);

// CLI/config mini-grammar:
//   const:2.0  bernoulli:0.3  discrete:0.5@0.25,2.0@0.75  exp:1.0
//   lognormal:0.0,0.5  uniform:0.0,2.0  rademacher  normal:0.0,1.0
// rademacher and normal are spin-only; echo laws reject negative support.
EchoLaw parse_echo_law(const std::string& text);
SpinLaw parse_spin_law(const std::string& text);

}  // namespace ew::laws
