// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ew/errors.hpp"

namespace ew::io {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const walk::Trajectory& t) {
  os << "step,increment,position\n";
  for (std::int64_t k = 1; k <= t.n(); ++k) {
    os << k << ',' << format_double(t.increments[k - 1]) << ','
       << format_double(t.positions[k - 1]) << '\n';
  }
}

void write_tree_csv(std::ostream& os, const tree::MemoryTree& t,
                    const tree::SubtreeWeights& w) {
  if (static_cast<std::int64_t>(w.component_of.size()) != t.n) {
    throw BadIndices("tree and component table sizes disagree");
  }
  os << "vertex,parent,edge_weight,retained,vertex_weight,component_root\n";
  for (std::int64_t i = 1; i <= t.n; ++i) {
    os << i << ',' << t.parent[i - 1] << ','
       << format_double(t.edge_weight[i - 1]) << ','
       << (t.retained[i - 1] ? 1 : 0) << ','
       << format_double(t.vertex_weight[i - 1]) << ',' << w.component_of[i - 1]
       << '\n';
  }
}

void write_particles_csv(std::ostream& os, const branching::BrwState& s) {
  os << "index,parent,birth_time,position\n";
  for (std::size_t i = 0; i < s.particles.size(); ++i) {
    const auto& p = s.particles[i];
    os << (i + 1) << ',' << p.parent << ',' << format_double(p.birth_time)
       << ',' << format_double(p.position) << '\n';
  }
}

void write_pool_csv(std::ostream& os, const limits::SamplePool& pool) {
  os << "sample\n";
  for (double v : pool.samples) {
    os << format_double(v) << '\n';
  }
}

void write_summary_csv(std::ostream& os, const ensemble::EnsembleSummary& s) {
  os << "checkpoint,mean,var,q05,q25,q50,q75,q95,N\n";
  for (const auto& row : s.rows) {
    os << row.checkpoint << ',' << format_double(row.mean) << ','
       << format_double(row.var) << ',' << format_double(row.q05) << ','
       << format_double(row.q25) << ',' << format_double(row.q50) << ','
       << format_double(row.q75) << ',' << format_double(row.q95) << ','
       << s.replicates << '\n';
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) {
    throw ConfigError("cannot open '" + path + "' for writing");
  }
  os << content;
  os.flush();
  if (!os) {
    throw ConfigError("write to '" + path + "' failed");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw ConfigError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << is.rdbuf();
  return buf.str();
}

}  // namespace ew::io
