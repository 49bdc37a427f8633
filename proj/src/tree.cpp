// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/tree.hpp"

#include <cmath>
#include <limits>

#include "ew/errors.hpp"
#include "ew/numeric.hpp"

namespace ew::tree {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

MemoryTree grow(const laws::WalkParams& params, std::int64_t n,
                const rng::Stream& stream) {
  params.validate();
  if (n < 1) throw BadIndices("tree size must be >= 1");
  MemoryTree t;
  t.n = n;
  const auto count = static_cast<std::size_t>(n);
  t.parent.reserve(count);
  t.edge_weight.reserve(count);
  t.retained.reserve(count);
  t.vertex_weight.reserve(count);
  t.log_vertex_weight.reserve(count);

  t.parent.push_back(0);
  t.edge_weight.push_back(0.0);
  t.retained.push_back(0);
  t.vertex_weight.push_back(1.0);
  t.log_vertex_weight.push_back(0.0);

  const bool pure_echo = params.p >= 1.0;
  for (std::int64_t k = 2; k <= n; ++k) {
    const auto step = static_cast<std::uint64_t>(k);
    // Parent and echo factor are drawn for every vertex: the underlying
    // recursive tree exists independently of the percolation marks, and the
    // addressed draws match the walk's wherever the walk consumed them.
    const auto parent = static_cast<std::int64_t>(
        1 + stream.pick(step, rng::kIndexSlot,
                        static_cast<std::uint64_t>(k - 1)));
    const double xi = params.echo.sample(stream, step, rng::kEchoSlot);
    const bool kept =
        pure_echo || stream.u01(step, rng::kEpsilonSlot) < params.p;
    t.parent.push_back(parent);
    t.edge_weight.push_back(xi);
    t.retained.push_back(kept ? 1 : 0);
    if (kept) {
      const auto at = static_cast<std::size_t>(parent - 1);
      const double w = xi * t.vertex_weight[at];
      t.vertex_weight.push_back(w);
      t.log_vertex_weight.push_back(
          w == 0.0 ? kNegInf : std::log(xi) + t.log_vertex_weight[at]);
    } else {
      t.vertex_weight.push_back(1.0);
      t.log_vertex_weight.push_back(0.0);
    }
  }
  return t;
}

SubtreeWeights subtree_weights(const MemoryTree& tree) {
  SubtreeWeights out;
  const auto count = static_cast<std::size_t>(tree.n);
  out.component_of.resize(count);
  // Forward pass: parents precede children, so a vertex either starts a new
  // component (cut edge or the root) or joins its parent's.
  std::vector<std::size_t> slot_of(count, 0);
  std::vector<numeric::KahanAccumulator> acc;
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t vertex = static_cast<std::int64_t>(i) + 1;
    if (vertex == 1 || !tree.retained[i]) {
      slot_of[i] = out.roots.size();
      out.roots.push_back(vertex);
      out.component_size.push_back(0);
      acc.emplace_back();
    } else {
      slot_of[i] = slot_of[static_cast<std::size_t>(tree.parent[i] - 1)];
    }
    const std::size_t slot = slot_of[i];
    out.component_of[i] = out.roots[slot];
    out.component_size[slot] += 1;
    acc[slot].add(tree.vertex_weight[i]);
  }
  out.weight.reserve(out.roots.size());
  for (const auto& a : acc) out.weight.push_back(a.value());
  return out;
}

std::vector<double> root_spins(const laws::SpinLaw& spin,
                               const MemoryTree& tree,
                               const rng::Stream& stream) {
  const auto count = static_cast<std::size_t>(tree.n);
  std::vector<double> spins(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t vertex = static_cast<std::int64_t>(i) + 1;
    if (vertex == 1 || !tree.retained[i])
      spins[i] = spin.sample(stream, static_cast<std::uint64_t>(vertex),
                             rng::kSpinSlot);
  }
  return spins;
}

walk::Trajectory reconstruct_walk(const MemoryTree& tree,
                                  const std::vector<double>& spins) {
  const auto count = static_cast<std::size_t>(tree.n);
  if (spins.size() < count)
    throw BadIndices("need one spin entry per vertex");
  walk::Trajectory out;
  out.increments.reserve(count);
  out.positions.reserve(count);
  // component_of resolved inline; increment k is spin(root) * weight(k).
  std::vector<std::int64_t> comp(count);
  numeric::KahanAccumulator acc;
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t vertex = static_cast<std::int64_t>(i) + 1;
    comp[i] = (vertex == 1 || !tree.retained[i])
                  ? vertex
                  : comp[static_cast<std::size_t>(tree.parent[i] - 1)];
    const double x =
        spins[static_cast<std::size_t>(comp[i] - 1)] * tree.vertex_weight[i];
    out.increments.push_back(x);
    acc.add(x);
    out.positions.push_back(acc.value());
  }
  return out;
}

double weight_power_sum(const MemoryTree& tree, double theta) {
  numeric::KahanAccumulator acc;
  for (std::size_t i = 0; i < static_cast<std::size_t>(tree.n); ++i) {
    const double lw = tree.log_vertex_weight[i];
    if (lw == kNegInf) {
      // 0^0 = 1 convention matches the weight recursion at theta = 0.
      acc.add(theta == 0.0 ? 1.0 : 0.0);
    } else {
      acc.add(std::exp(theta * lw));
    }
  }
  return acc.value();
}

double expected_subtree_moment(const laws::WalkParams& params, double alpha,
                               std::int64_t r, std::int64_t n) {
  params.validate();
  if (r < 1 || r > n) throw BadIndices("need 1 <= r <= n");
  const double ma = params.echo.moment(alpha);
  if (!std::isfinite(ma))
    throw OutOfMomentDomain("echo law lacks the requested moment");
  const double pma = params.p * ma;
  const double rd = static_cast<double>(r);
  const double nd = static_cast<double>(n);
  const double cut = r > 1 ? 1.0 - params.p : 1.0;
  return cut * std::exp(std::lgamma(rd) - std::lgamma(nd) +
                        std::lgamma(nd + pma) - std::lgamma(rd + pma));
}

}  // namespace ew::tree
