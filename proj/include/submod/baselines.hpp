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

// Reference algorithms: greedy (naive and lazy), threshold sieving over a
// stream, and randomized greedy for non-monotone objectives. Every argmax
// breaks ties toward the smaller element id.

#ifndef SUBMOD_BASELINES_HPP_
#define SUBMOD_BASELINES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "submod/core.hpp"
#include "submod/streaming.hpp"

namespace submod {

struct BaselineResult {
  Subset set;  // in insertion order
  double value = 0.0;
  std::uint64_t queries = 0;
  // Elements held at once; n for the offline algorithms.
  std::size_t peak_stored = 0;
};

// Adds the element of largest marginal k times, stopping once the best
// marginal is <= 0. One query per remaining element per round.
BaselineResult NaiveGreedy(ValueOracle& oracle, std::size_t n, std::size_t k);

// Same output as NaiveGreedy, re-evaluating stale upper bounds on demand.
BaselineResult LazyGreedy(ValueOracle& oracle, std::size_t n, std::size_t k);

struct SieveOptions {
  double eps = 0.1;
  // When set, an element is only added to a candidate set if the distinct
  // elements held across all sets stay within this many.
  std::optional<std::size_t> max_buffer;
};

// One candidate set per threshold v = (1+eps)^j with D <= v <= 2kD, where D
// is the largest singleton value seen so far. e joins S_v when |S_v| < k and
// f(e | S_v) >= (v/2 - f(S_v)) / (k - |S_v|).
class SieveStreaming final : public StreamingAlgorithm {
 public:
  SieveStreaming(ValueOracle& oracle, std::size_t k, SieveOptions options = {});

  void process(ElementId e) override;
  void finish() override {}
  std::size_t stored_elements() const override { return held_.size(); }
  Subset solution() const override;
  double solution_value() const;

  std::size_t live_sets() const { return sets_.size(); }
  std::size_t max_live_sets() const { return max_live_sets_; }
  std::size_t peak_stored() const { return peak_stored_; }
  // ceil(log_{1+eps}(2k)) + 1.
  std::size_t live_set_bound() const;
  // The distinct elements currently held, sorted.
  Subset held_elements() const;

 private:
  struct Candidate {
    Subset set;
    double value = 0.0;
  };

  void refresh_thresholds();
  void release(const Subset& set);

  ValueOracle* oracle_;
  std::size_t k_;
  SieveOptions options_;
  double log_base_;
  double max_singleton_ = 0.0;
  std::map<long, Candidate> sets_;
  std::unordered_map<ElementId, std::size_t> held_;
  std::size_t max_live_sets_ = 0;
  std::size_t peak_stored_ = 0;
};

BaselineResult RunSieve(ValueOracle& oracle, const StreamOrder& order,
                        std::size_t k, SieveOptions options = {});

struct RandomGreedyResult {
  BaselineResult result;
  // f(e | S) at the moment each element of result.set was added.
  std::vector<double> added_marginals;
  // Rounds that picked a dummy slot.
  std::size_t skipped_rounds = 0;
};

// k rounds; each round ranks the elements with positive marginal, keeps the
// top k, pads to k slots with no-op dummies and picks a slot uniformly.
RandomGreedyResult RandomGreedy(ValueOracle& oracle, std::size_t n,
                                std::size_t k, RngState rng);

}  // namespace submod

#endif  // SUBMOD_BASELINES_HPP_
