// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ew {

// Base class for all failures raised by the library. Everything thrown on a
// non-exceptional code path (bad arguments, undefined quantities, violated
// hypotheses) derives from this, so callers can catch one type at the CLI
// boundary and map it to an exit code.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define EW_DEFINE_ERROR(Name)                                        \
  struct Name : Error {                                              \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

// A fractional moment of an echo law with an atom at zero is requested for a
// negative order, where it is infinite.
EW_DEFINE_ERROR(NegativeMomentOfAtomAtZero);
// Numerical integration failed to converge to the requested tolerance.
EW_DEFINE_ERROR(DivergentIntegral);
// A moment order lies outside the finite-moment domain of the law.
EW_DEFINE_ERROR(OutOfMomentDomain);
// Model parameters degenerate to a process the operation cannot handle.
EW_DEFINE_ERROR(DegenerateModel);
// Vertex or checkpoint indices are out of range or unordered.
EW_DEFINE_ERROR(BadIndices);
// A stated hypothesis of the operation does not hold for the inputs.
EW_DEFINE_ERROR(HypothesisViolation);
// The requested horizon exceeds the supported population bound.
EW_DEFINE_ERROR(HorizonTooLarge);
// Exact tilted sampling is unavailable for this echo law family.
EW_DEFINE_ERROR(TiltingUnavailable);
// A two-parameter identity was invoked with (numerically) equal parameters.
EW_DEFINE_ERROR(EqualParameters);
// A moment condition required for the recursion fails at some order.
EW_DEFINE_ERROR(MomentCondition);
// The argument lies outside the domain of the special function.
EW_DEFINE_ERROR(OutOfDomain);
// Too few checkpoints, or too narrow a span, for a rate estimate.
EW_DEFINE_ERROR(InsufficientCheckpoints);
// A two-sample test was requested with undersized samples.
EW_DEFINE_ERROR(TooFewSamples);
// A law expression or CLI value could not be parsed.
EW_DEFINE_ERROR(ParseError);
// A configuration file or flag combination is invalid.
EW_DEFINE_ERROR(ConfigError);

#undef EW_DEFINE_ERROR

}  // namespace ew
