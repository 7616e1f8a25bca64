// rng.hpp - deterministic random streams (xoshiro256++ seeded via splitmix64).
//
// Every trial owns its own stream derived from (master_seed, stream_index),
// so results do not depend on thread count or execution order. Uniform and
// normal draws are generated from explicit bit manipulation rather than
// <random> distributions, which keeps the byte-level output independent of
// the standard library implementation.
#pragma once

#include <cmath>
#include <cstdint>

#include "rfisim/constants.hpp"

namespace rfisim {

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& word : state_) word = sm.next();
  }

  // Independent per-trial substream; index 0 is reserved for the master
  // stream so trial i uses index i+1 elsewhere by convention of the caller.
  static RandomStream substream(std::uint64_t master_seed, std::uint64_t stream_index) {
    SplitMix64 sm{master_seed ^ (0x9e3779b97f4a7c15ULL * (stream_index + 1))};
    RandomStream rs(sm.next());
    return rs;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double next_unit_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // N(0, sigma^2) via Box-Muller; consumes exactly two uniforms per call.
  double next_normal(double sigma) {
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace rfisim
