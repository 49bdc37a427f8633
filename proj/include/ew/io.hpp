// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "ew/branching.hpp"
#include "ew/ensemble.hpp"
#include "ew/limits.hpp"
#include "ew/tree.hpp"
#include "ew/walk.hpp"

namespace ew::io {

// Decimal rendering at 17 significant digits, enough to reproduce any
// double exactly on readback. Integral values drop the fraction entirely,
// so small golden files stay human-checkable.
std::string format_double(double x);

// Columnar writers. Each emits one header row and '\n' line endings; all
// numeric cells go through format_double, so files are byte-reproducible.
void write_trajectory_csv(std::ostream& os, const walk::Trajectory& t);
void write_tree_csv(std::ostream& os, const tree::MemoryTree& t,
                    const tree::SubtreeWeights& w);
void write_particles_csv(std::ostream& os, const branching::BrwState& s);
void write_pool_csv(std::ostream& os, const limits::SamplePool& pool);
void write_summary_csv(std::ostream& os, const ensemble::EnsembleSummary& s);

// Whole-file helpers; throw ConfigError when the path cannot be opened.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ew::io
