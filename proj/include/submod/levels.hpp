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
//  Level families, insertion history and update bands
//
// The multi-level streams keep k+1 partial solutions L_0..L_k, where L_l
// aims at l elements. In window i an element is offered to the levels in a
// band around i / alpha, the number of optimal elements expected to have
// arrived by then. Every accepted insertion is logged, so the whole family
// can be rebuilt from the log alone.

#ifndef SUBMOD_LEVELS_HPP_
#define SUBMOD_LEVELS_HPP_

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "submod/core.hpp"

namespace submod {

struct BandParams {
  std::size_t k = 1;
  double alpha = 1.0;
  double band_const = 20.0;

  // m = ceil(alpha k); also the number of windows.
  std::size_t window_count() const;
  // round(band_const * alpha * sqrt(k ln k)); 0 when k == 1.
  std::size_t half_width() const;
};

// Raw band [z_l, z_h] of window i (1-based), z_h may equal k.
struct Band {
  std::size_t low = 0;
  std::size_t high = 0;

  friend bool operator==(const Band&, const Band&) = default;
};

Band BandIndices(const BandParams& params, std::size_t window);

// Levels l whose successor L_{l+1} is rewritten in window i: the raw band
// with both ends clamped to k - 1, so L_{k+1} is never formed and no query
// exceeds k elements. Requires k >= 1.
Band UpdateRange(const BandParams& params, std::size_t window);

class LevelFamily {
 public:
  LevelFamily() = default;
  // k + 1 empty levels with value 0.
  explicit LevelFamily(std::size_t k);

  std::size_t k() const { return levels_.empty() ? 0 : levels_.size() - 1; }
  const Subset& level(std::size_t l) const { return levels_[l]; }
  double value(std::size_t l) const { return values_[l]; }
  const std::vector<double>& values() const { return values_; }

  void assign(std::size_t l, Subset set, double value);

  // Smallest l in 1..k with the largest value; 0 when k == 0.
  std::size_t best_level() const;

  friend bool operator==(const LevelFamily&, const LevelFamily&) = default;

 private:
  std::vector<Subset> levels_;
  std::vector<double> values_;
};

struct HistoryEntry {
  ElementId element = 0;
  std::size_t window = 0;
  // Update range used for the insertion.
  Band band;

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

// Insertion log plus the distinct-element view H. One entry per updating
// window, windows strictly increasing. An element re-offered from H gets a
// new log entry but is not stored twice.
class History {
 public:
  // Throws InputError unless entry.window exceeds every earlier window.
  void append(const HistoryEntry& entry);

  const std::vector<HistoryEntry>& entries() const { return entries_; }
  // Distinct elements in first-insertion order.
  const std::vector<ElementId>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(ElementId e) const { return members_.contains(e); }

  friend bool operator==(const History& a, const History& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<HistoryEntry> entries_;
  std::vector<ElementId> elements_;
  std::unordered_set<ElementId> members_;
};

enum class SmoothingRule {
  // If f(L_l) >= f(L_{l+1}), L_{l+1} <- L_l + argmax_{e in L_{l+1} \ L_l}
  // f(e | L_l), or L_l itself when the difference is empty.
  kGreedyExtend,
  // If f(L_l) >= f(L_{l+1}), L_{l+1} <- L_l.
  kCopy,
};

// L + e, or L unchanged when e is already there.
Subset WithElement(const Subset& level, ElementId e);

// L_{l+1} <- L_l + e for l in band (old L_l on the right). `new_values[j]`
// is f(L_{band.low + j} + e) when provided; otherwise it is queried.
void InsertIntoLevels(LevelFamily& levels, ValueOracle& oracle, ElementId e,
                      Band band, const std::vector<double>* new_values);

// One increasing sweep over l = 1..k-1. Returns the number of queries made.
std::uint64_t SmoothLevels(LevelFamily& levels, ValueOracle& oracle,
                           SmoothingRule rule);

// The monotone sweep as a value-returning operation.
LevelFamily SmoothingSweep(LevelFamily levels, ValueOracle& oracle);

// Replays a history window by window.
class LevelReplayer {
 public:
  LevelReplayer(const History& history, ValueOracle& oracle, std::size_t k,
                SmoothingRule rule);

  // Applies every entry with window < `window`, leaving the family as it was
  // when that window started. Windows must be requested in nondecreasing
  // order.
  const LevelFamily& before_window(std::size_t window);
  const LevelFamily& final_levels();

  std::uint64_t queries() const { return queries_; }

 private:
  void apply(const HistoryEntry& entry);

  const History* history_;
  ValueOracle* oracle_;
  SmoothingRule rule_;
  LevelFamily levels_;
  std::size_t next_ = 0;
  std::uint64_t queries_ = 0;
};

// Rebuilds the final family from scratch. Throws InputError on a history
// entry whose band exceeds k - 1.
LevelFamily ReconstructLevels(const History& history, ValueOracle& oracle,
                              std::size_t k,
                              SmoothingRule rule = SmoothingRule::kGreedyExtend);

}  // namespace submod

#endif  // SUBMOD_LEVELS_HPP_
