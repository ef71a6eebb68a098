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

#include "submod/levels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "submod/errors.hpp"

namespace submod {

std::size_t BandParams::window_count() const {
  return static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(k)));
}

std::size_t BandParams::half_width() const {
  if (k <= 1) return 0;
  const auto kd = static_cast<double>(k);
  return static_cast<std::size_t>(
      std::llround(band_const * alpha * std::sqrt(kd * std::log(kd))));
}

Band BandIndices(const BandParams& params, std::size_t window) {
  const double position = static_cast<double>(window) / params.alpha;
  const auto lower = static_cast<std::size_t>(std::floor(position));
  const auto upper = static_cast<std::size_t>(std::ceil(position));
  const std::size_t w = params.half_width();
  Band band;
  band.low = lower > w ? lower - w : 0;
  band.high = std::min(params.k, upper + w);
  return band;
}

Band UpdateRange(const BandParams& params, std::size_t window) {
  Band band = BandIndices(params, window);
  const std::size_t top = params.k - 1;
  band.low = std::min(band.low, top);
  band.high = std::min(band.high, top);
  return band;
}

LevelFamily::LevelFamily(std::size_t k) : levels_(k + 1), values_(k + 1, 0.0) {}

void LevelFamily::assign(std::size_t l, Subset set, double value) {
  levels_[l] = std::move(set);
  values_[l] = value;
}

std::size_t LevelFamily::best_level() const {
  std::size_t best = 0;
  for (std::size_t l = 1; l < values_.size(); ++l) {
    if (best == 0 || values_[l] > values_[best]) best = l;
  }
  return best;
}

void History::append(const HistoryEntry& entry) {
  if (!entries_.empty() && entry.window <= entries_.back().window) {
    throw InputError("history windows must be strictly increasing");
  }
  entries_.push_back(entry);
  if (members_.insert(entry.element).second) elements_.push_back(entry.element);
}

Subset WithElement(const Subset& level, ElementId e) {
  Subset result = level;
  if (std::find(result.begin(), result.end(), e) == result.end()) {
    result.push_back(e);
  }
  return result;
}

void InsertIntoLevels(LevelFamily& levels, ValueOracle& oracle, ElementId e,
                      Band band, const std::vector<double>* new_values) {
  // Descending, so every L_l on the right-hand side is still the old one.
  for (std::size_t l = band.high + 1; l-- > band.low;) {
    Subset extended = WithElement(levels.level(l), e);
    double value;
    if (new_values != nullptr) {
      value = (*new_values)[l - band.low];
    } else if (extended.size() == levels.level(l).size()) {
      value = levels.value(l);
    } else {
      value = oracle.eval(extended);
    }
    levels.assign(l + 1, std::move(extended), value);
  }
}

std::uint64_t SmoothLevels(LevelFamily& levels, ValueOracle& oracle,
                           SmoothingRule rule) {
  std::uint64_t queries = 0;
  for (std::size_t l = 1; l < levels.k(); ++l) {
    if (levels.value(l) < levels.value(l + 1)) continue;
    if (rule == SmoothingRule::kCopy) {
      levels.assign(l + 1, levels.level(l), levels.value(l));
      continue;
    }
    Subset difference;
    for (ElementId e : levels.level(l + 1)) {
      const auto& lower = levels.level(l);
      if (std::find(lower.begin(), lower.end(), e) == lower.end()) {
        difference.push_back(e);
      }
    }
    if (difference.empty()) {
      levels.assign(l + 1, levels.level(l), levels.value(l));
      continue;
    }
    std::sort(difference.begin(), difference.end());
    Subset best_set;
    double best_value = 0.0;
    for (ElementId e : difference) {
      Subset candidate = WithElement(levels.level(l), e);
      const double value = oracle.eval(candidate);
      ++queries;
      // Strict comparison keeps the smallest id among ties.
      if (best_set.empty() || value > best_value) {
        best_value = value;
        best_set = std::move(candidate);
      }
    }
    levels.assign(l + 1, std::move(best_set), best_value);
  }
  return queries;
}

LevelFamily SmoothingSweep(LevelFamily levels, ValueOracle& oracle) {
  SmoothLevels(levels, oracle, SmoothingRule::kGreedyExtend);
  return levels;
}

LevelReplayer::LevelReplayer(const History& history, ValueOracle& oracle,
                             std::size_t k, SmoothingRule rule)
    : history_(&history), oracle_(&oracle), rule_(rule), levels_(k) {}

void LevelReplayer::apply(const HistoryEntry& entry) {
  if (levels_.k() == 0 || entry.band.low > entry.band.high ||
      entry.band.high + 1 > levels_.k()) {
    throw InputError("history entry for window " +
                     std::to_string(entry.window) +
                     " has a band outside the level range");
  }
  const std::uint64_t before = oracle_->query_count();
  InsertIntoLevels(levels_, *oracle_, entry.element, entry.band, nullptr);
  SmoothLevels(levels_, *oracle_, rule_);
  queries_ += oracle_->query_count() - before;
}

const LevelFamily& LevelReplayer::before_window(std::size_t window) {
  const auto& entries = history_->entries();
  while (next_ < entries.size() && entries[next_].window < window) {
    apply(entries[next_]);
    ++next_;
  }
  return levels_;
}

const LevelFamily& LevelReplayer::final_levels() {
  return before_window(static_cast<std::size_t>(-1));
}

LevelFamily ReconstructLevels(const History& history, ValueOracle& oracle,
                              std::size_t k, SmoothingRule rule) {
  LevelReplayer replayer(history, oracle, k, rule);
  return replayer.final_levels();
}

}  // namespace submod
