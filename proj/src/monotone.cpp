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

#include "submod/monotone.hpp"

#include <algorithm>
#include <string>

#include "submod/errors.hpp"

namespace submod {

namespace {

const BandParams& Validated(const BandParams& params) {
  if (params.k == 0) throw InputError("cardinality k must be at least 1");
  if (!(params.alpha >= 1.0)) throw InputError("alpha must be at least 1");
  if (!(params.band_const >= 0.0)) {
    throw InputError("band constant must be nonnegative");
  }
  return params;
}

}  // namespace

MultiLevelStream::MultiLevelStream(ValueOracle& oracle,
                                   std::size_t stream_length,
                                   const BandParams& params, RngState rng,
                                   StreamOptions options)
    : oracle_(&oracle),
      params_(Validated(params)),
      rng_(rng),
      options_(options),
      partition_(PartitionStream(stream_length, params.window_count(), rng)),
      levels_(params.k) {
  for (std::size_t size : partition_.sizes()) {
    stats_.max_window_size = std::max(stats_.max_window_size, size);
  }
}

void MultiLevelStream::process(ElementId e) {
  if (finished_ || received_ >= partition_.stream_length()) {
    throw InputError("more arrivals than the declared stream length");
  }
  close_ready_windows();
  buffer_.push_back(e);
  ++received_;
  stats_.peak_stored = std::max(stats_.peak_stored, stored_elements());
  close_ready_windows();
}

void MultiLevelStream::finish() {
  if (finished_) return;
  if (received_ != partition_.stream_length()) {
    throw InputError("stream ended after " + std::to_string(received_) +
                     " of " + std::to_string(partition_.stream_length()) +
                     " arrivals");
  }
  close_ready_windows();
  finished_ = true;
}

Subset MultiLevelStream::solution() const {
  return levels_.level(levels_.best_level());
}

StreamResult MultiLevelStream::take_result() {
  if (!finished_) throw InputError("stream not finished");
  StreamResult result;
  const std::size_t best = levels_.best_level();
  result.best = levels_.level(best);
  result.best_value = levels_.value(best);
  result.levels = std::move(levels_);
  result.history = std::move(history_);
  result.stats = stats_;
  result.trace = std::move(trace_);
  return result;
}

void MultiLevelStream::close_ready_windows() {
  while (next_window_ <= partition_.window_count() &&
         partition_.end(next_window_) <= received_) {
    close_window(next_window_);
    ++next_window_;
  }
}

void MultiLevelStream::close_window(std::size_t window) {
  const std::size_t m = partition_.window_count();
  const Band band = UpdateRange(params_, window);
  const std::size_t width = band.high - band.low + 1;
  const std::size_t stored = stored_elements();
  std::vector<double> before;
  if (options_.check_invariants) before = levels_.values();

  Subset admitted = admit_arrivals(window, buffer_);

  Subset resampled;
  const RngState resample =
      rng_.substream(streams::kResample).substream(window);
  const double keep = 1.0 / static_cast<double>(m);
  for (ElementId e : history_.elements()) {
    if (resample.uniform(e) < keep) resampled.push_back(e);
  }

  Subset candidates = admitted;
  candidates.insert(candidates.end(), resampled.begin(), resampled.end());

  std::optional<ElementId> winner;
  double winner_score = 0.0;
  std::vector<double> winner_values;
  std::vector<double> values(width);
  for (ElementId e : candidates) {
    double score = 0.0;
    for (std::size_t j = 0; j < width; ++j) {
      const std::size_t l = band.low + j;
      const Subset& level = levels_.level(l);
      if (std::find(level.begin(), level.end(), e) != level.end()) {
        values[j] = levels_.value(l);
      } else {
        values[j] = oracle_->eval(WithElement(level, e));
        ++stats_.selection_queries;
      }
      score += values[j] - levels_.value(l);
    }
    if (!winner || score > winner_score ||
        (score == winner_score && e < *winner)) {
      winner = e;
      winner_score = score;
      winner_values = values;
    }
  }
  on_window_decided(window, band, winner, winner_score);

  bool improved = false;
  if (winner) {
    double extended_sum = 0.0;
    double current_sum = 0.0;
    for (std::size_t j = 0; j < width; ++j) {
      extended_sum += winner_values[j];
      current_sum += levels_.value(band.low + j + 1);
    }
    improved = extended_sum > current_sum;
  }
  if (improved) {
    history_.append({*winner, window, band});
    InsertIntoLevels(levels_, *oracle_, *winner, band, &winner_values);
    stats_.update_queries += SmoothLevels(levels_, *oracle_, smoothing_rule());
  }

  if (options_.record_trace) {
    WindowTrace t;
    t.window = window;
    t.arrivals = buffer_;
    t.admitted = std::move(admitted);
    t.resampled = std::move(resampled);
    t.band = band;
    t.winner = winner;
    t.winner_score = winner_score;
    t.improved = improved;
    t.stored_elements = stored;
    t.level_values = levels_.values();
    for (std::size_t l = 0; l <= levels_.k(); ++l) {
      t.levels.push_back(levels_.level(l));
    }
    trace_.push_back(std::move(t));
  }
  if (options_.check_invariants) check_invariants(window, band, before);

  buffer_.clear();
  ++stats_.windows;
  stats_.peak_stored = std::max(stats_.peak_stored, stored_elements());
}

void MultiLevelStream::check_invariants(std::size_t window, Band band,
                                        const std::vector<double>& before) const {
  const auto& after = levels_.values();
  const std::size_t k = levels_.k();
  const bool nested = smoothing_rule() == SmoothingRule::kGreedyExtend;
  auto fail = [window](const std::string& what, std::size_t l) {
    throw InvariantViolation("window " + std::to_string(window) + ": " + what +
                             " at level " + std::to_string(l));
  };
  for (std::size_t l = nested ? 0 : 1; l < k; ++l) {
    if (after[l] > after[l + 1]) fail("level values decrease", l);
  }
  for (std::size_t l = 0; l < k; ++l) {
    const bool in_band = l >= band.low && l <= band.high;
    if ((nested || !in_band) && before[l] > after[l + 1]) {
      fail("cross-window nesting broken", l);
    }
  }
  if (history_.size() > partition_.window_count()) {
    fail("history larger than the window count", 0);
  }
}

StreamResult RunMonotone(ValueOracle& oracle, const StreamOrder& order,
                         const BandParams& params, RngState rng,
                         const StreamOptions& options) {
  MonotoneStream stream(oracle, order.size(), params, rng, options);
  for (ElementId e : order.permutation) stream.process(e);
  stream.finish();
  return stream.take_result();
}

}  // namespace submod
