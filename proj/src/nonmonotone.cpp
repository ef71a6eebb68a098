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

#include "submod/nonmonotone.hpp"

#include <algorithm>
#include <string>

#include "submod/errors.hpp"

namespace submod {

namespace {

// Summed band marginal of e, computed exactly as the window selection does
// so that scores compare bit for bit with the recorded winner's.
double BandScore(const LevelFamily& levels, ValueOracle& oracle, ElementId e,
                 Band band, std::uint64_t& queries) {
  double score = 0.0;
  for (std::size_t l = band.low; l <= band.high; ++l) {
    const Subset& level = levels.level(l);
    double value;
    if (std::find(level.begin(), level.end(), e) != level.end()) {
      value = levels.value(l);
    } else {
      value = oracle.eval(WithElement(level, e));
      ++queries;
    }
    score += value - levels.value(l);
  }
  return score;
}

}  // namespace

double SubsampleThreshold(std::size_t window, std::size_t rejections,
                          std::size_t window_count) {
  if (window == 0 || window > window_count || rejections + 1 > window) {
    throw InputError("subsample threshold needs 0 <= |A| < j <= m, got j=" +
                     std::to_string(window) + " |A|=" +
                     std::to_string(rejections) +
                     " m=" + std::to_string(window_count));
  }
  return static_cast<double>(window_count - window + rejections + 1) /
         static_cast<double>(window_count);
}

double SubsampleCoin(const RngState& rng, ElementId e, std::size_t window) {
  return rng.substream(streams::kSubsample).substream(e).uniform(window);
}

NonMonotoneStream::NonMonotoneStream(ValueOracle& oracle,
                                     std::size_t stream_length,
                                     const BandParams& params, RngState rng,
                                     StreamOptions options)
    : MultiLevelStream(oracle, stream_length, params, rng, options) {}

std::uint64_t NonMonotoneStream::rejection_sets(
    const Subset& elements, std::size_t window,
    std::vector<std::vector<std::size_t>>& sets,
    std::vector<std::uint64_t>& costs) {
  if (window == 0 || window - 1 > records_.size()) {
    throw InputError("rejection set for window " + std::to_string(window) +
                     " needs the earlier windows closed");
  }
  const std::size_t m = partition().window_count();
  sets.assign(elements.size(), {});
  costs.assign(elements.size(), 0);
  if (window == 1 || elements.empty()) return 0;

  LevelReplayer replayer(history(), oracle(), params().k,
                         SmoothingRule::kCopy);
  for (std::size_t r = 1; r < window; ++r) {
    const WindowRecord& record = records_[r - 1];
    const LevelFamily* levels = nullptr;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const ElementId e = elements[i];
      const double q = SubsampleThreshold(r, sets[i].size(), m);
      if (SubsampleCoin(rng(), e, r) > q) {
        sets[i].push_back(r);
        continue;
      }
      // No winner means f_r = -infinity: nothing loses to it.
      if (!record.winner) continue;
      if (levels == nullptr) levels = &replayer.before_window(r);
      const double score = BandScore(*levels, oracle(), e, record.band,
                                     costs[i]);
      if (score < record.score ||
          (score == record.score && e > *record.winner)) {
        sets[i].push_back(r);
      }
    }
  }
  return replayer.queries();
}

std::vector<std::size_t> NonMonotoneStream::rejection_set(ElementId e,
                                                          std::size_t window) {
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::uint64_t> costs;
  rejection_sets({e}, window, sets, costs);
  return sets.front();
}

Subset NonMonotoneStream::admit_arrivals(std::size_t window,
                                         const Subset& arrivals) {
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::uint64_t> costs;
  RunStats& stats = mutable_stats();
  stats.replay_level_queries += rejection_sets(arrivals, window, sets, costs);

  const std::size_t m = partition().window_count();
  Subset admitted;
  for (std::size_t i = 0; i < arrivals.size(); ++i) {
    const ElementId e = arrivals[i];
    const double q = SubsampleThreshold(window, sets[i].size(), m);
    const double x = SubsampleCoin(rng(), e, window);
    const bool admit = x <= q;
    if (admit) admitted.push_back(e);
    stats.replay_score_queries += costs[i];
    replay_costs_.push_back({e, window, costs[i]});
    if (options().record_trace) {
      draws_.push_back({e, window, sets[i].size(), q, x, admit});
    }
  }
  return admitted;
}

void NonMonotoneStream::on_window_decided(std::size_t window, Band band,
                                          std::optional<ElementId> winner,
                                          double score) {
  records_.push_back({window, winner, winner ? score : 0.0, band});
}

NonMonotoneResult RunNonMonotone(ValueOracle& oracle, const StreamOrder& order,
                                 const BandParams& params, RngState rng,
                                 const StreamOptions& options) {
  NonMonotoneStream stream(oracle, order.size(), params, rng, options);
  for (ElementId e : order.permutation) stream.process(e);
  stream.finish();
  NonMonotoneResult result;
  result.records = stream.records();
  result.draws = stream.draws();
  result.replay_costs = stream.replay_costs();
  result.run = stream.take_result();
  return result;
}

ReplayAudit ReplayCostAudit(const NonMonotoneResult& result) {
  ReplayAudit audit;
  audit.per_element = result.replay_costs;
  audit.score_queries = result.run.stats.replay_score_queries;
  audit.level_queries = result.run.stats.replay_level_queries;
  audit.total_queries = result.run.stats.total_queries();
  const std::size_t windows = result.run.stats.windows;
  std::vector<std::uint64_t> sums(windows, 0);
  std::vector<std::size_t> counts(windows, 0);
  for (const ReplayCost& c : result.replay_costs) {
    if (c.window == 0 || c.window > windows) continue;
    sums[c.window - 1] += c.queries;
    ++counts[c.window - 1];
  }
  audit.mean_by_window.assign(windows, 0.0);
  for (std::size_t i = 0; i < windows; ++i) {
    if (counts[i] > 0) {
      audit.mean_by_window[i] =
          static_cast<double>(sums[i]) / static_cast<double>(counts[i]);
    }
  }
  return audit;
}

}  // namespace submod
