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
//  Coverage hardness instance
//
// Universe [k]^N. Bad set B_i = {x : x_i = 1} for a coordinate i > 2; good
// set G_j = {x : x_1 = j, x_2 != k} + {x : x_1 = x_2 = k}. A union of g good
// and b bad sets covers the fraction
//
//   f(g, b) = 1 - (1 - P_g) (1 - 1/k)^b,  P_0 = 0,  P_g = (g(k-1) + 1) / k^2,
//
// which equals 1 - (1 - 1/k)^(g+b) for g <= 2: up to two good sets look
// exactly like bad ones. Values are fractions of k^N, so OPT = f(k, 0).
//
// A streaming algorithm that never holds two good sets at once can only
// reach f(2, k-2) = f(0, k) -> 1 - 1/e against OPT -> 1 - 1/e + o(1).

#ifndef SUBMOD_HARDNESS_HPP_
#define SUBMOD_HARDNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "submod/core.hpp"
#include "submod/streaming.hpp"

namespace submod {

// f(g, b) in any field type T (double, or an exact rational in tests).
template <typename T>
T HardnessValue(std::size_t g, std::size_t b, std::size_t k) {
  const T one(1);
  const T kk(static_cast<long>(k));
  T miss = one;  // (1 - 1/k)^b
  for (std::size_t i = 0; i < b; ++i) miss *= (kk - one) / kk;
  T covered(0);
  if (g > 0) covered = (T(static_cast<long>(g)) * (kk - one) + one) / (kk * kk);
  return one - (one - covered) * miss;
}

class HardnessFunction final : public SetFunction {
 public:
  // n sets, k of them good at ids drawn uniformly from `rng`. Requires
  // 2 <= k <= n.
  HardnessFunction(std::size_t n, std::size_t k, RngState rng);

  std::size_t ground_size() const override { return n_; }
  double evaluate(std::span<const ElementId> set) const override;
  bool monotone() const override { return true; }
  std::string name() const override { return "hardness"; }

  std::size_t k() const { return k_; }
  // f(k, 0).
  double optimum() const { return HardnessValue<double>(k_, 0, k_); }
  std::size_t good_count(std::span<const ElementId> set) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<bool> good_;
};

// True iff every queried set holds fewer than r good sets.
bool IndistinguishabilityAudit(const std::vector<QueryRecord>& transcript,
                               const HardnessFunction& instance,
                               std::size_t r);

// P[X >= t] for X hypergeometric: `draws` items without replacement from
// `population` of which `marked` are marked.
double HypergeometricTail(std::size_t population, std::size_t marked,
                          std::size_t draws, std::size_t t);

struct LowerBound {
  // P[an m-subset holds >= r-1 good sets].
  double p = 0.0;
  double bound = 0.0;
  // p k > 1: the bound says nothing and is clamped to 1.
  bool vacuous = false;
};

// (1 - pk) f(0, k) + pk, the most a buffer of m sets can be expected to
// achieve when r good sets are needed to tell them apart.
LowerBound PropLbBound(std::size_t n, std::size_t k, std::size_t m,
                       std::size_t r);

class MemoryBudgetExceeded : public std::runtime_error {
 public:
  MemoryBudgetExceeded(std::size_t position, std::size_t stored,
                       std::size_t budget);
  std::size_t position() const { return position_; }
  std::size_t stored() const { return stored_; }

 private:
  std::size_t position_;
  std::size_t stored_;
};

struct BoundedRun {
  double value = 0.0;  // fraction of the universe
  std::size_t peak_stored = 0;
  Subset solution;
};

using StreamingFactory =
    std::function<std::unique_ptr<StreamingAlgorithm>(ValueOracle&)>;

// Streams `order` into a fresh algorithm, checking stored_elements() after
// every step. Throws MemoryBudgetExceeded on the first step above budget.
BoundedRun RunMemoryBounded(const StreamingFactory& factory,
                            ValueOracle& oracle, std::size_t budget,
                            const StreamOrder& order);

// Holds every arrival, then runs lazy greedy at the end of the stream.
class StoreAllGreedy final : public StreamingAlgorithm {
 public:
  StoreAllGreedy(ValueOracle& oracle, std::size_t k)
      : oracle_(&oracle), k_(k) {}

  void process(ElementId e) override { stored_.push_back(e); }
  void finish() override;
  std::size_t stored_elements() const override { return stored_.size(); }
  Subset solution() const override { return solution_; }

 private:
  ValueOracle* oracle_;
  std::size_t k_;
  Subset stored_;
  Subset solution_;
};

}  // namespace submod

#endif  // SUBMOD_HARDNESS_HPP_
