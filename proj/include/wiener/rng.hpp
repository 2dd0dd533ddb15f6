// Copyright 2026 The Wiener Bound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIENER_RNG_HPP_
#define WIENER_RNG_HPP_

#include <cstdint>

namespace wiener {

// Portable seeded generator used for every random corpus in this project.
//
// State transition is the 64-bit LCG
//     state <- state * 6364136223846793005 + increment  (mod 2^64)
// with increment = 2 * stream + 1, so each stream id selects an independent
// full-period sequence. Seeding: state = 0, step, state += seed, step.
// Each output is the SplitMix64 finalizer applied to the new state:
//     z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//     z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//     z =  z ^ (z >> 31)
// Bounded integers use rejection below 2^64 mod bound, then `r % bound`.
// Unit reals take the top 53 bits: (r >> 11) * 2^-53.
//
// Nothing here depends on standard-library distributions, so a given
// (seed, stream) produces the same graphs on every platform.
class Rng {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;

  explicit constexpr Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : increment_((stream << 1) | 1U) {
    step();
    state_ += seed;
    step();
  }

  constexpr std::uint64_t next_u64() {
    step();
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound). bound must be nonzero.
  constexpr std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1).
  constexpr double unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // True with probability p; p <= 0 never, p >= 1 always.
  constexpr bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return unit() < p;
  }

 private:
  constexpr void step() { state_ = state_ * kMultiplier + increment_; }

  std::uint64_t state_ = 0;
  std::uint64_t increment_;
};

}  // namespace wiener

#endif  // WIENER_RNG_HPP_
