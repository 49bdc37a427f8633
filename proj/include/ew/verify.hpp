// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ew::verify {

// One checked clause: a measured quantity against its oracle. The detail
// string always spells out measured value, uncertainty, oracle, and the
// tolerance that was applied, so a failing line is self-contained.
struct ClauseResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

// One acceptance criterion: a titled bundle of clauses that passes only
// when every clause does.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<ClauseResult> clauses;
};

inline constexpr int kCriterionCount = 11;

// Runs one criterion (1-based id). Output is a pure function of the seed;
// threads only changes wall time. Criteria draw from per-criterion tapes,
// so any subset runs identically to the full suite.
CriterionResult run_criterion(int id, std::uint64_t seed, int threads = 1);

// Text block: one line per clause, then one PASS/FAIL verdict line.
std::string format_criterion(const CriterionResult& r);

// Suite names accepted by the CLI: "all" or "c1".."c11". Throws
// ConfigError for anything else.
std::vector<int> criteria_for_suite(const std::string& suite);

}  // namespace ew::verify
