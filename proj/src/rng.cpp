// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/rng.hpp"

#include <cmath>

#include "ew/numeric.hpp"

namespace ew::rng {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::uint32_t c[4], std::uint32_t k0, std::uint32_t k1) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  c[0] = hi1 ^ c[1] ^ k0;
  c[1] = lo1;
  c[2] = hi0 ^ c[3] ^ k1;
  c[3] = lo0;
}

}  // namespace

PhiloxBlock philox4x32_10(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2,
                          std::uint32_t c3, std::uint32_t k0,
                          std::uint32_t k1) {
  std::uint32_t c[4] = {c0, c1, c2, c3};
  for (int r = 0; r < 9; ++r) {
    round_once(c, k0, k1);
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  round_once(c, k0, k1);
  return PhiloxBlock{{c[0], c[1], c[2], c[3]}};
}

Stream::Stream(const Tape& tape, std::uint64_t stream_index) {
  // splitmix64 is a bijection, so distinct streams under one master seed
  // always receive distinct keys.
  const std::uint64_t h = numeric::splitmix64(
      tape.master_seed() + 0x9E3779B97F4A7C15ULL * (stream_index + 1));
  k0_ = static_cast<std::uint32_t>(h);
  k1_ = static_cast<std::uint32_t>(h >> 32);
}

PhiloxBlock Stream::block(std::uint64_t step, std::uint32_t slot,
                          std::uint32_t idx) const {
  return philox4x32_10(static_cast<std::uint32_t>(step),
                       static_cast<std::uint32_t>(step >> 32),
                       slot | (idx << 8), 0u, k0_, k1_);
}

std::uint64_t Stream::raw64(std::uint64_t step, std::uint32_t slot,
                            std::uint32_t idx) const {
  const PhiloxBlock b = block(step, slot, idx);
  return (static_cast<std::uint64_t>(b.w[0]) << 32) | b.w[1];
}

double Stream::u01(std::uint64_t step, std::uint32_t slot,
                   std::uint32_t idx) const {
  // 53 significant bits, offset by half an ulp: lands strictly inside (0,1).
  const std::uint64_t u = raw64(step, slot, idx);
  return (static_cast<double>(u >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t Stream::pick(std::uint64_t step, std::uint32_t slot,
                           std::uint64_t bound, std::uint32_t idx) const {
  const std::uint64_t u = raw64(step, slot, idx);
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(u) * bound) >> 64);
}

double Stream::normal(std::uint64_t step, std::uint32_t slot,
                      std::uint32_t idx) const {
  const PhiloxBlock b = block(step, slot, idx);
  const std::uint64_t ua = (static_cast<std::uint64_t>(b.w[0]) << 32) | b.w[1];
  const std::uint64_t ub = (static_cast<std::uint64_t>(b.w[2]) << 32) | b.w[3];
  const double u1 = (static_cast<double>(ua >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = (static_cast<double>(ub >> 11) + 0.5) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

double Stream::exponential(std::uint64_t step, std::uint32_t slot, double rate,
                           std::uint32_t idx) const {
  return -std::log(u01(step, slot, idx)) / rate;
}

}  // namespace ew::rng
