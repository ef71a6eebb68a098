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
//  Non-monotone multi-level stream
//
// Same windows, bands and history as the monotone stream, with two changes.
// An arrival e of window i only becomes a candidate with probability
// q_e^i = (m - i + |A_e^i| + 1) / m, where A_e^i is the set of earlier
// windows r in which e would not have been picked: either its band score
// against the levels of that time loses to the recorded winner (score, then
// smaller id), or its own coin x_e^r exceeded q_e^r. This makes every element
// a candidate of every window with probability exactly 1/m. Smoothing only
// copies: f(L_l) >= f(L_{l+1}) gives L_{l+1} <- L_l.
//
// The coins x_e^r come from the counter-based generator keyed on (seed, e, r)
// and past level families are replayed from the history, so nothing per
// element or per window is stored beyond one score record per window.

#ifndef SUBMOD_NONMONOTONE_HPP_
#define SUBMOD_NONMONOTONE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "submod/monotone.hpp"

namespace submod {

struct WindowRecord {
  std::size_t window = 0;
  std::optional<ElementId> winner;
  // Summed band marginal of the winner; meaningful iff winner is set.
  double score = 0.0;
  Band band;
};

struct SubsampleDraw {
  ElementId element = 0;
  std::size_t window = 0;
  std::size_t rejections = 0;  // |A_e^i|
  double threshold = 1.0;      // q_e^i
  double coin = 0.0;           // x_e^i
  bool admitted = false;
};

// q = (m - j + a + 1) / m. Requires a <= j - 1 and 1 <= j <= m.
double SubsampleThreshold(std::size_t window, std::size_t rejections,
                          std::size_t window_count);

// The subsampling coin x_e^j.
double SubsampleCoin(const RngState& rng, ElementId e, std::size_t window);

struct ReplayCost {
  ElementId element = 0;
  std::size_t window = 0;
  // Oracle queries spent scoring this arrival against past windows.
  std::uint64_t queries = 0;
};

class NonMonotoneStream final : public MultiLevelStream {
 public:
  NonMonotoneStream(ValueOracle& oracle, std::size_t stream_length,
                    const BandParams& params, RngState rng,
                    StreamOptions options = {});

  const std::vector<WindowRecord>& records() const { return records_; }
  const std::vector<SubsampleDraw>& draws() const { return draws_; }
  const std::vector<ReplayCost>& replay_costs() const { return replay_costs_; }

  // A_e^j: the windows r < j in which e would not have been picked, in
  // increasing order. Needs windows 1..j-1 closed. Replays the history, so it
  // costs oracle queries that are not charged to the run's stats.
  std::vector<std::size_t> rejection_set(ElementId e, std::size_t window);

 protected:
  Subset admit_arrivals(std::size_t window, const Subset& arrivals) override;
  SmoothingRule smoothing_rule() const override { return SmoothingRule::kCopy; }
  void on_window_decided(std::size_t window, Band band,
                         std::optional<ElementId> winner,
                         double score) override;

 private:
  // A_e^window for each of `elements`. costs[i] receives the scoring
  // queries spent on elements[i]; returns the level replay queries.
  std::uint64_t rejection_sets(const Subset& elements, std::size_t window,
                               std::vector<std::vector<std::size_t>>& sets,
                               std::vector<std::uint64_t>& costs);

  std::vector<WindowRecord> records_;
  std::vector<SubsampleDraw> draws_;
  std::vector<ReplayCost> replay_costs_;
};

struct NonMonotoneResult {
  StreamResult run;
  std::vector<WindowRecord> records;
  // Filled when options.record_trace is set.
  std::vector<SubsampleDraw> draws;
  // One entry per arrival, in stream order.
  std::vector<ReplayCost> replay_costs;
};

NonMonotoneResult RunNonMonotone(ValueOracle& oracle, const StreamOrder& order,
                                 const BandParams& params, RngState rng,
                                 const StreamOptions& options = {});

struct ReplayAudit {
  std::vector<ReplayCost> per_element;
  // Mean per-arrival scoring cost of window i at index i - 1; 0 for empty
  // windows.
  std::vector<double> mean_by_window;
  std::uint64_t score_queries = 0;
  std::uint64_t level_queries = 0;
  // All queries of the run: selection + update + both replay categories.
  std::uint64_t total_queries = 0;
};

ReplayAudit ReplayCostAudit(const NonMonotoneResult& result);

}  // namespace submod

#endif  // SUBMOD_NONMONOTONE_HPP_
