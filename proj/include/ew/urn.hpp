// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "ew/laws.hpp"
#include "ew/rng.hpp"

namespace ew::urn {

// Two-color urn with unit diagonal replacement. Starts at one ball of each
// color; each draw returns one ball of the drawn color plus a copy.
struct UrnState {
  std::int64_t red = 1;
  std::int64_t blue = 1;
  std::int64_t step = 1;
};

// State after n-1 sequential draws; red + blue = n + 1. Draw j consumes
// u01(step=j, kAux0).
UrnState polya_sample(std::int64_t n, const rng::Stream& stream);

// Law of the time-r subtree size at time n in a uniform recursive tree:
// pmf(i) = (r-1) ((n-r)!/(n-1)!) ((n-i-1)!/(n-r+1-i)!) on {1..n-r+1}.
struct SubtreeSizeLaw {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::vector<double> pmf;  // entry j holds pmf(j+1)
  std::vector<double> cdf;

  // Inverse-CDF sample of the size value in {1..n-r+1}.
  std::int64_t sample(const rng::Stream& stream, std::uint64_t step,
                      std::uint32_t slot, std::uint32_t idx = 0) const;
};

// Floating pmf via log-factorials; valid for any 2 <= r <= n.
SubtreeSizeLaw y_pmf(std::int64_t n, std::int64_t r);

// Exact-rational evaluation of the same pmf, converted entrywise to double.
// Restricted to n <= 60 where the factorial ratios stay cheap.
std::vector<double> y_pmf_exact(std::int64_t n, std::int64_t r);

// True iff the exact-rational pmf entries sum to exactly one.
bool y_pmf_unit_mass_exact(std::int64_t n, std::int64_t r);

// Sample of the Beta(1, r-1) limit of Y(n, r)/n; r = 1 degenerates to 1.
double beta_r_sample(std::int64_t r, const rng::Stream& stream,
                     std::uint64_t step, std::uint32_t slot,
                     std::uint32_t idx = 0);

// N realizations of the two-walk composite: an urn split (R, B) of n+1,
// one echo factor, and independent pure-echo walks of horizons R and B
// combined as hat_S_R + xi check_S_B. Equal in law to the step-(n+1)
// echoed-walk position when p = 1 and the spin is constant 1; other
// parameters are rejected. Sample i uses tape streams 2i and 2i+1.
std::vector<double> composite_sample(const laws::WalkParams& params,
                                     std::int64_t n, std::int64_t N,
                                     const rng::Tape& tape);

}  // namespace ew::urn
