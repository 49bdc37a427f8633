// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "ew/laws.hpp"
#include "ew/rng.hpp"
#include "ew/walk.hpp"

namespace ew::tree {

// Random recursive tree with Bernoulli bond percolation and multiplicative
// vertex weights. Entry i of each vector describes vertex i+1; vertex 1 is
// the root and carries weight 1 with no parent (parent entry 0).
struct MemoryTree {
  std::int64_t n = 0;
  std::vector<std::int64_t> parent;
  std::vector<double> edge_weight;
  std::vector<char> retained;
  std::vector<double> vertex_weight;
  // log(vertex weight); -inf marks an exact zero weight. Kept alongside the
  // linear value so deep supercritical products stay representable.
  std::vector<double> log_vertex_weight;
};

// Percolation components and their weight sums. Component roots are vertex
// 1 and every vertex whose incoming edge was cut.
struct SubtreeWeights {
  std::vector<std::int64_t> roots;
  std::vector<double> weight;
  std::vector<std::int64_t> component_size;
  std::vector<std::int64_t> component_of;  // per vertex, a root id
};

// Grows the tree on the same tape addresses the walk consumes: retention
// coin, recall index, and echo factor of step k are read at step-k slots,
// so a shared stream yields the walk's exact draws.
MemoryTree grow(const laws::WalkParams& params, std::int64_t n,
                const rng::Stream& stream);

SubtreeWeights subtree_weights(const MemoryTree& tree);

// Spin values addressed like the walk's fresh-spin draws: entry k-1 holds
// the spin of step k. Only component roots are consumed.
std::vector<double> root_spins(const laws::SpinLaw& spin,
                               const MemoryTree& tree,
                               const rng::Stream& stream);

// Rebuilds the echoed walk from the weighted components: increment k is
// spin(root of k) * weight(k), positions are compensated prefix sums.
walk::Trajectory reconstruct_walk(const MemoryTree& tree,
                                  const std::vector<double>& spins);

// Sum of vertex weights raised to a power, evaluated through the stored
// logarithms.
double weight_power_sum(const MemoryTree& tree, double theta);

// Expected sum of alpha-th weight powers over the component rooted at r:
// (1 - p 1{r>1}) ((r-1)!/(n-1)!) Gamma(n+p m_alpha)/Gamma(r+p m_alpha),
// evaluated in log space. alpha = 1 gives the mean component weight.
double expected_subtree_moment(const laws::WalkParams& params, double alpha,
                               std::int64_t r, std::int64_t n);

}  // namespace ew::tree
