// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "ew/laws.hpp"
#include "ew/rng.hpp"

namespace ew::walk {

// One realised path: increments and their compensated prefix sums.
struct Trajectory {
  std::vector<double> increments;
  std::vector<double> positions;

  std::int64_t n() const { return static_cast<std::int64_t>(increments.size()); }
};

// Echoed walk of horizon n on the given tape view. Draws are addressed by
// (step, slot): retention coin, recall index, echo factor, fresh spin live
// in separate sub-streams, so two runs differing only in p share every echo
// and spin value at steps where their retention coins agree.
Trajectory simulate(const laws::WalkParams& params, std::int64_t n,
                    const rng::Stream& stream);

// Same recursion into a caller-owned buffer; avoids reallocation in
// ensemble loops.
void simulate_into(const laws::WalkParams& params, std::int64_t n,
                   const rng::Stream& stream, Trajectory& out);

// Ordinary random walk baseline with i.i.d. spins, consuming the same spin
// sub-stream addresses the echoed walk would use.
Trajectory simulate_orw(const laws::SpinLaw& spin, std::int64_t n,
                        const rng::Stream& stream);

}  // namespace ew::walk
