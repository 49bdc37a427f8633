// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace ew::rng {

// Counter-based generator (Philox 4x32-10). Every random quantity in the
// laboratory is addressed by (stream, step, slot, idx), never by draw order,
// so changing one model parameter cannot shift any other draw. This is what
// makes the walk, the weighted tree, and the branching embedding agree
// pointwise on a common seed.
struct PhiloxBlock {
  std::uint32_t w[4];
};

PhiloxBlock philox4x32_10(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2,
                          std::uint32_t c3, std::uint32_t k0, std::uint32_t k1);

// Slot conventions. A simulation step consumes at most one value from each
// independent sub-stream: the retention coin, the recall index, the echo
// factor, and the fresh spin. Auxiliary slots serve module-specific draws.
enum Slot : std::uint32_t {
  kEpsilonSlot = 0,
  kIndexSlot = 1,
  kEchoSlot = 2,
  kSpinSlot = 3,
  kAux0 = 4,
  kAux1 = 5,
  kAux2 = 6,
  kAux3 = 7,
};

class Tape {
 public:
  explicit Tape(std::uint64_t master_seed) : master_(master_seed) {}
  std::uint64_t master_seed() const { return master_; }

 private:
  std::uint64_t master_;
};

// A view of one replicate's random tape. Derives the per-stream key once;
// all draws are pure functions of (step, slot, idx).
class Stream {
 public:
  Stream(const Tape& tape, std::uint64_t stream_index);

  // Uniform on the open interval (0, 1).
  double u01(std::uint64_t step, std::uint32_t slot, std::uint32_t idx = 0) const;
  // Uniform on {0, ..., bound-1}.
  std::uint64_t pick(std::uint64_t step, std::uint32_t slot,
                     std::uint64_t bound, std::uint32_t idx = 0) const;
  // Standard normal (Box-Muller, one block per value).
  double normal(std::uint64_t step, std::uint32_t slot,
                std::uint32_t idx = 0) const;
  // Exponential with the given rate.
  double exponential(std::uint64_t step, std::uint32_t slot, double rate,
                     std::uint32_t idx = 0) const;

  std::uint64_t raw64(std::uint64_t step, std::uint32_t slot,
                      std::uint32_t idx = 0) const;

 private:
  PhiloxBlock block(std::uint64_t step, std::uint32_t slot,
                    std::uint32_t idx) const;
  std::uint32_t k0_ = 0;
  std::uint32_t k1_ = 0;
};

}  // namespace ew::rng
