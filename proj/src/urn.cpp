// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/urn.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "ew/errors.hpp"
#include "ew/numeric.hpp"
#include "ew/walk.hpp"

namespace ew::urn {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial_int(std::int64_t k) {
  cpp_int f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_y_indices(std::int64_t n, std::int64_t r) {
  if (r < 2 || r > n) throw BadIndices("subtree-size law needs 2 <= r <= n");
}

cpp_rational y_pmf_exact_entry(std::int64_t n, std::int64_t r,
                               std::int64_t i) {
  return cpp_rational(cpp_int(r - 1) * factorial_int(n - r) *
                          factorial_int(n - i - 1),
                      factorial_int(n - 1) * factorial_int(n - r + 1 - i));
}

}  // namespace

UrnState polya_sample(std::int64_t n, const rng::Stream& stream) {
  if (n < 1) throw BadIndices("urn step must be >= 1");
  UrnState s;
  for (std::int64_t j = 1; j < n; ++j) {
    const double u = stream.u01(static_cast<std::uint64_t>(j), rng::kAux0);
    const double red_share =
        static_cast<double>(s.red) / static_cast<double>(s.red + s.blue);
    if (u < red_share)
      s.red += 1;
    else
      s.blue += 1;
    s.step += 1;
  }
  return s;
}

SubtreeSizeLaw y_pmf(std::int64_t n, std::int64_t r) {
  check_y_indices(n, r);
  SubtreeSizeLaw law;
  law.n = n;
  law.r = r;
  const std::int64_t support = n - r + 1;
  law.pmf.reserve(static_cast<std::size_t>(support));
  law.cdf.reserve(static_cast<std::size_t>(support));
  // The factorial-ratio pmf telescopes: pmf(1) = (r-1)/(n-1) and
  // pmf(i+1) = pmf(i) (n-r+1-i)/(n-i-1). One multiply per entry keeps
  // the unit-mass defect near machine precision even for large n, which
  // log-factorial differences do not.
  double p = static_cast<double>(r - 1) / static_cast<double>(n - 1);
  numeric::KahanAccumulator acc;
  for (std::int64_t i = 1; i <= support; ++i) {
    law.pmf.push_back(p);
    acc.add(p);
    law.cdf.push_back(acc.value());
    p *= static_cast<double>(n - r + 1 - i) / static_cast<double>(n - i - 1);
  }
  return law;
}

std::int64_t SubtreeSizeLaw::sample(const rng::Stream& stream,
                                    std::uint64_t step, std::uint32_t slot,
                                    std::uint32_t idx) const {
  const double u = stream.u01(step, slot, idx);
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  const auto j = it == cdf.end() ? cdf.size() - 1
                                 : static_cast<std::size_t>(it - cdf.begin());
  return static_cast<std::int64_t>(j) + 1;
}

std::vector<double> y_pmf_exact(std::int64_t n, std::int64_t r) {
  check_y_indices(n, r);
  if (n > 60) throw BadIndices("exact-rational mode is limited to n <= 60");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n - r + 1));
  for (std::int64_t i = 1; i <= n - r + 1; ++i)
    out.push_back(
        static_cast<double>(y_pmf_exact_entry(n, r, i)));
  return out;
}

bool y_pmf_unit_mass_exact(std::int64_t n, std::int64_t r) {
  check_y_indices(n, r);
  if (n > 60) throw BadIndices("exact-rational mode is limited to n <= 60");
  cpp_rational total = 0;
  for (std::int64_t i = 1; i <= n - r + 1; ++i)
    total += y_pmf_exact_entry(n, r, i);
  return total == 1;
}

double beta_r_sample(std::int64_t r, const rng::Stream& stream,
                     std::uint64_t step, std::uint32_t slot,
                     std::uint32_t idx) {
  if (r < 1) throw BadIndices("component index must be >= 1");
  if (r == 1) return 1.0;
  const double u = stream.u01(step, slot, idx);
  return 1.0 - std::pow(u, 1.0 / static_cast<double>(r - 1));
}

std::vector<double> composite_sample(const laws::WalkParams& params,
                                     std::int64_t n, std::int64_t N,
                                     const rng::Tape& tape) {
  params.validate();
  if (n < 1 || N < 1) throw BadIndices("need n >= 1 and N >= 1");
  if (params.p != 1.0 ||
      params.spin.mean() != 1.0 || params.spin.second_moment() != 1.0)
    throw HypothesisViolation(
        "the two-walk composite requires p = 1 and unit constant spin");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(N));
  walk::Trajectory hat, check;
  for (std::int64_t i = 0; i < N; ++i) {
    const rng::Stream hat_stream(tape, static_cast<std::uint64_t>(2 * i));
    const rng::Stream check_stream(tape,
                                   static_cast<std::uint64_t>(2 * i + 1));
    const UrnState split = polya_sample(n, hat_stream);
    // One echo factor at the otherwise unused step 0.
    const double xi = params.echo.sample(hat_stream, 0, rng::kEchoSlot);
    walk::simulate_into(params, split.red, hat_stream, hat);
    walk::simulate_into(params, split.blue, check_stream, check);
    out.push_back(hat.positions.back() + xi * check.positions.back());
  }
  return out;
}

}  // namespace ew::urn
