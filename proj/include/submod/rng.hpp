// Copyright 2026 The Authors.
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

//
//  Counter-based random numbers
//
// Every draw is a pure function of (seed, stream, counter). Algorithms that
// need to look at an old draw again (the subsampling coins of the
// non-monotone stream) recompute it instead of storing it.

#ifndef SUBMOD_RNG_HPP_
#define SUBMOD_RNG_HPP_

#include <cstdint>

namespace submod {

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t CounterBits(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t counter) {
  std::uint64_t h = Mix64(seed ^ 0x9e3779b97f4a7c15ULL);
  h = Mix64(h ^ Mix64(stream + 0x632be59bd9b4e019ULL));
  return Mix64(h ^ Mix64(counter + 0x85157af5a2d1d7c3ULL));
}

// Top 53 bits scaled into [0, 1).
constexpr double BitsToUnit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Stream tags used by the library. Distinct purposes never share a stream.
namespace streams {
inline constexpr std::uint64_t kPermutation = 1;
inline constexpr std::uint64_t kPartition = 2;
inline constexpr std::uint64_t kResample = 3;
inline constexpr std::uint64_t kSubsample = 4;
inline constexpr std::uint64_t kRandomGreedy = 5;
inline constexpr std::uint64_t kKernel = 6;
inline constexpr std::uint64_t kHardness = 7;
inline constexpr std::uint64_t kSynthetic = 8;
inline constexpr std::uint64_t kActiveWindows = 9;
}  // namespace streams

struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return CounterBits(seed, stream, counter);
  }
  constexpr double uniform(std::uint64_t counter) const {
    return BitsToUnit(bits(counter));
  }
  // Derived stream keyed on `tag`; same seed, independent sequence.
  constexpr RngState substream(std::uint64_t tag) const {
    return RngState{seed, Mix64(stream ^ Mix64(tag + 0xd1b54a32d192ed03ULL))};
  }

  friend constexpr bool operator==(const RngState&, const RngState&) = default;
};

// Sequential reader over a counter-based stream.
class RngCursor {
 public:
  explicit constexpr RngCursor(RngState state, std::uint64_t start = 0)
      : state_(state), counter_(start) {}

  std::uint64_t next_bits() { return state_.bits(counter_++); }
  double uniform() { return BitsToUnit(next_bits()); }

  // Uniform integer in [0, bound) by Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound);

  // Standard normal via Box-Muller; consumes two draws.
  double normal();

  std::uint64_t counter() const { return counter_; }
  const RngState& state() const { return state_; }

 private:
  RngState state_;
  std::uint64_t counter_;
};

}  // namespace submod

#endif  // SUBMOD_RNG_HPP_
