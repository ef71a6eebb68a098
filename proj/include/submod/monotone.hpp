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
//  Multi-level random-order streams
//
// The stream is cut into m = ceil(alpha k) windows. In window i the
// candidates are the window's arrivals (all of them for the monotone stream,
// a subsample for the non-monotone one) plus every element of H re-offered
// with probability 1/m. The candidate maximizing the summed marginal gain
// over the update range wins; if it raises the summed value of the levels it
// would replace, L_{l+1} <- L_l + e* across the range, the winner joins H
// and a smoothing sweep restores increasing level values.
//
// Memory is H plus the window being buffered: at most m + |w_i| elements.

#ifndef SUBMOD_MONOTONE_HPP_
#define SUBMOD_MONOTONE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "submod/core.hpp"
#include "submod/levels.hpp"
#include "submod/partition.hpp"
#include "submod/streaming.hpp"

namespace submod {

struct StreamOptions {
  // Keep a WindowTrace per window, including every level set.
  bool record_trace = false;
  // Throw InvariantViolation as soon as a level invariant breaks.
  bool check_invariants = false;
};

struct WindowTrace {
  std::size_t window = 0;
  // Window arrivals in stream order.
  Subset arrivals;
  // Arrivals that became candidates.
  Subset admitted;
  // Elements of H re-offered in this window.
  Subset resampled;
  Band band;
  std::optional<ElementId> winner;
  double winner_score = 0.0;
  bool improved = false;
  // |H| + |w_i| while the window was buffered.
  std::size_t stored_elements = 0;
  std::vector<double> level_values;
  std::vector<Subset> levels;
};

struct RunStats {
  std::size_t windows = 0;
  std::size_t peak_stored = 0;
  std::size_t max_window_size = 0;
  // Candidate scoring in the current window.
  std::uint64_t selection_queries = 0;
  // Smoothing sweeps.
  std::uint64_t update_queries = 0;
  // Non-monotone subsampling: rebuilding past level families ...
  std::uint64_t replay_level_queries = 0;
  // ... and scoring arrivals against past windows.
  std::uint64_t replay_score_queries = 0;

  std::uint64_t total_queries() const {
    return selection_queries + update_queries + replay_level_queries +
           replay_score_queries;
  }
};

struct StreamResult {
  Subset best;
  double best_value = 0.0;
  LevelFamily levels;
  History history;
  RunStats stats;
  std::vector<WindowTrace> trace;
};

// Shared window machinery. Subclasses decide which arrivals become
// candidates and how levels are smoothed.
class MultiLevelStream : public StreamingAlgorithm {
 public:
  // `stream_length` arrivals are expected; the window partition is drawn
  // from `rng` at construction. Throws InputError when params.k == 0 or
  // alpha < 1.
  MultiLevelStream(ValueOracle& oracle, std::size_t stream_length,
                   const BandParams& params, RngState rng,
                   StreamOptions options);

  void process(ElementId e) override;
  void finish() override;
  std::size_t stored_elements() const override {
    return history_.size() + buffer_.size();
  }
  Subset solution() const override;

  const LevelFamily& levels() const { return levels_; }
  const History& history() const { return history_; }
  const RunStats& stats() const { return stats_; }
  const WindowPartition& partition() const { return partition_; }
  const std::vector<WindowTrace>& trace() const { return trace_; }

  // Moves the run's state out; the stream must be finished.
  StreamResult take_result();

 protected:
  virtual Subset admit_arrivals(std::size_t window, const Subset& arrivals) = 0;
  virtual SmoothingRule smoothing_rule() const = 0;
  virtual void on_window_decided(std::size_t /*window*/, Band /*band*/,
                                 std::optional<ElementId> /*winner*/,
                                 double /*score*/) {}

  ValueOracle& oracle() { return *oracle_; }
  const BandParams& params() const { return params_; }
  const RngState& rng() const { return rng_; }
  const StreamOptions& options() const { return options_; }
  RunStats& mutable_stats() { return stats_; }

 private:
  void close_ready_windows();
  void close_window(std::size_t window);
  void check_invariants(std::size_t window, Band band,
                        const std::vector<double>& before) const;

  ValueOracle* oracle_;
  BandParams params_;
  RngState rng_;
  StreamOptions options_;
  WindowPartition partition_;
  std::size_t received_ = 0;
  std::size_t next_window_ = 1;
  bool finished_ = false;
  Subset buffer_;
  LevelFamily levels_;
  History history_;
  RunStats stats_;
  std::vector<WindowTrace> trace_;
};

class MonotoneStream final : public MultiLevelStream {
 public:
  using MultiLevelStream::MultiLevelStream;

 protected:
  Subset admit_arrivals(std::size_t /*window*/,
                        const Subset& arrivals) override {
    return arrivals;
  }
  SmoothingRule smoothing_rule() const override {
    return SmoothingRule::kGreedyExtend;
  }
};

// Streams `order` through a MonotoneStream.
StreamResult RunMonotone(ValueOracle& oracle, const StreamOrder& order,
                         const BandParams& params, RngState rng,
                         const StreamOptions& options = {});

}  // namespace submod

#endif  // SUBMOD_MONOTONE_HPP_
