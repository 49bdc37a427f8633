// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/walk.hpp"

#include "ew/errors.hpp"
#include "ew/numeric.hpp"

namespace ew::walk {

void simulate_into(const laws::WalkParams& params, std::int64_t n,
                   const rng::Stream& stream, Trajectory& out) {
  params.validate();
  if (n < 1) throw BadIndices("horizon must be >= 1");
  const auto count = static_cast<std::size_t>(n);
  out.increments.clear();
  out.increments.reserve(count);
  out.positions.clear();
  out.positions.reserve(count);

  numeric::KahanAccumulator acc;
  out.increments.push_back(
      params.spin.sample(stream, 1, rng::kSpinSlot));
  acc.add(out.increments.back());
  out.positions.push_back(acc.value());

  const bool pure_echo = params.p >= 1.0;
  for (std::int64_t k = 2; k <= n; ++k) {
    const auto step = static_cast<std::uint64_t>(k);
    const bool echoed =
        pure_echo || stream.u01(step, rng::kEpsilonSlot) < params.p;
    double x;
    if (echoed) {
      const std::uint64_t recalled =
          1 + stream.pick(step, rng::kIndexSlot,
                          static_cast<std::uint64_t>(k - 1));
      const double xi = params.echo.sample(stream, step, rng::kEchoSlot);
      x = xi * out.increments[static_cast<std::size_t>(recalled - 1)];
    } else {
      x = params.spin.sample(stream, step, rng::kSpinSlot);
    }
    out.increments.push_back(x);
    acc.add(x);
    out.positions.push_back(acc.value());
  }
}

Trajectory simulate(const laws::WalkParams& params, std::int64_t n,
                    const rng::Stream& stream) {
  Trajectory out;
  simulate_into(params, n, stream, out);
  return out;
}

Trajectory simulate_orw(const laws::SpinLaw& spin, std::int64_t n,
                        const rng::Stream& stream) {
  if (n < 1) throw BadIndices("horizon must be >= 1");
  Trajectory out;
  const auto count = static_cast<std::size_t>(n);
  out.increments.reserve(count);
  out.positions.reserve(count);
  numeric::KahanAccumulator acc;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double x =
        spin.sample(stream, static_cast<std::uint64_t>(k), rng::kSpinSlot);
    out.increments.push_back(x);
    acc.add(x);
    out.positions.push_back(acc.value());
  }
  return out;
}

}  // namespace ew::walk
