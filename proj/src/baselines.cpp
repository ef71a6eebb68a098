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

#include "submod/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "submod/errors.hpp"

namespace submod {

namespace {

Subset Sorted(Subset s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

BaselineResult NaiveGreedy(ValueOracle& oracle, std::size_t n, std::size_t k) {
  const std::uint64_t start = oracle.query_count();
  BaselineResult out;
  out.peak_stored = n;
  out.value = oracle.eval({});
  std::vector<bool> chosen(n, false);
  for (std::size_t round = 0; round < std::min(k, n); ++round) {
    std::optional<ElementId> best;
    double best_gain = 0.0;
    for (ElementId e = 0; e < n; ++e) {
      if (chosen[e]) continue;
      const double gain = oracle.marginal(e, out.set, out.value);
      if (!best || gain > best_gain) {
        best = e;
        best_gain = gain;
      }
    }
    if (!best || best_gain <= 0.0) break;
    chosen[*best] = true;
    out.set.push_back(*best);
    out.value += best_gain;
  }
  out.queries = oracle.query_count() - start;
  return out;
}

BaselineResult LazyGreedy(ValueOracle& oracle, std::size_t n, std::size_t k) {
  struct Entry {
    double bound;
    ElementId element;
    std::size_t round;
  };
  // Top of the queue: largest bound, then smallest id.
  auto lower = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.element > b.element;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> queue(lower);

  const std::uint64_t start = oracle.query_count();
  BaselineResult out;
  out.peak_stored = n;
  out.value = oracle.eval({});
  for (ElementId e = 0; e < n; ++e) {
    queue.push({oracle.marginal(e, out.set, out.value), e, 0});
  }
  std::size_t round = 0;
  while (out.set.size() < k && !queue.empty()) {
    Entry top = queue.top();
    queue.pop();
    if (top.round != round) {
      top.bound = oracle.marginal(top.element, out.set, out.value);
      top.round = round;
      queue.push(top);
      continue;
    }
    if (top.bound <= 0.0) break;
    out.set.push_back(top.element);
    out.value += top.bound;
    ++round;
  }
  out.queries = oracle.query_count() - start;
  return out;
}

SieveStreaming::SieveStreaming(ValueOracle& oracle, std::size_t k,
                               SieveOptions options)
    : oracle_(&oracle), k_(k), options_(options) {
  if (!(options.eps > 0.0 && options.eps < 1.0)) {
    throw InputError("sieve eps must lie in (0, 1)");
  }
  log_base_ = std::log1p(options.eps);
}

std::size_t SieveStreaming::live_set_bound() const {
  if (k_ == 0) return 0;
  return static_cast<std::size_t>(
             std::ceil(std::log(2.0 * static_cast<double>(k_)) / log_base_)) +
         1;
}

void SieveStreaming::release(const Subset& set) {
  for (ElementId e : set) {
    auto it = held_.find(e);
    if (--it->second == 0) held_.erase(it);
  }
}

void SieveStreaming::refresh_thresholds() {
  if (max_singleton_ <= 0.0 || k_ == 0) return;
  const auto low =
      static_cast<long>(std::ceil(std::log(max_singleton_) / log_base_));
  long high = static_cast<long>(std::floor(
      std::log(2.0 * static_cast<double>(k_) * max_singleton_) / log_base_));
  // Rounding in the logs must not admit an extra threshold.
  high = std::min(high, low + static_cast<long>(std::floor(
                                  std::log(2.0 * static_cast<double>(k_)) /
                                  log_base_)));
  for (auto it = sets_.begin(); it != sets_.end();) {
    if (it->first < low) {
      release(it->second.set);
      it = sets_.erase(it);
    } else {
      ++it;
    }
  }
  for (long j = low; j <= high; ++j) sets_.try_emplace(j);
  max_live_sets_ = std::max(max_live_sets_, sets_.size());
}

void SieveStreaming::process(ElementId e) {
  const ElementId single[] = {e};
  const double singleton = oracle_->eval(single);
  if (singleton > max_singleton_) {
    max_singleton_ = singleton;
    refresh_thresholds();
  }
  for (auto& [j, candidate] : sets_) {
    if (candidate.set.size() >= k_) continue;
    const double v = std::pow(1.0 + options_.eps, static_cast<double>(j));
    const double gain = oracle_->marginal(e, candidate.set, candidate.value);
    const double need = (v / 2.0 - candidate.value) /
                        static_cast<double>(k_ - candidate.set.size());
    if (gain < need) continue;
    if (options_.max_buffer && !held_.contains(e) &&
        held_.size() + 1 > *options_.max_buffer) {
      continue;
    }
    candidate.set.push_back(e);
    candidate.value += gain;
    ++held_[e];
    peak_stored_ = std::max(peak_stored_, held_.size());
  }
}

Subset SieveStreaming::solution() const {
  const Candidate* best = nullptr;
  for (const auto& [j, candidate] : sets_) {
    if (best == nullptr || candidate.value > best->value) best = &candidate;
  }
  return best == nullptr ? Subset{} : best->set;
}

double SieveStreaming::solution_value() const {
  double best = 0.0;
  for (const auto& [j, candidate] : sets_) best = std::max(best, candidate.value);
  return best;
}

Subset SieveStreaming::held_elements() const {
  Subset out;
  out.reserve(held_.size());
  for (const auto& [e, count] : held_) out.push_back(e);
  return Sorted(std::move(out));
}

BaselineResult RunSieve(ValueOracle& oracle, const StreamOrder& order,
                        std::size_t k, SieveOptions options) {
  const std::uint64_t start = oracle.query_count();
  SieveStreaming sieve(oracle, k, options);
  for (ElementId e : order.permutation) sieve.process(e);
  sieve.finish();
  BaselineResult out;
  out.set = sieve.solution();
  out.value = sieve.solution_value();
  out.peak_stored = sieve.peak_stored();
  out.queries = oracle.query_count() - start;
  return out;
}

RandomGreedyResult RandomGreedy(ValueOracle& oracle, std::size_t n,
                                std::size_t k, RngState rng) {
  RngCursor cursor(rng.substream(streams::kRandomGreedy));
  const std::uint64_t start = oracle.query_count();
  RandomGreedyResult out;
  BaselineResult& res = out.result;
  res.peak_stored = n;
  res.value = oracle.eval({});
  std::vector<bool> chosen(n, false);
  std::vector<std::pair<double, ElementId>> ranked;
  for (std::size_t round = 0; round < k; ++round) {
    ranked.clear();
    for (ElementId e = 0; e < n; ++e) {
      if (chosen[e]) continue;
      const double gain = oracle.marginal(e, res.set, res.value);
      if (gain > 0.0) ranked.emplace_back(gain, e);
    }
    const std::size_t keep = std::min(k, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end(),
                      [](const auto& a, const auto& b) {
                        if (a.first != b.first) return a.first > b.first;
                        return a.second < b.second;
                      });
    const std::size_t slot = cursor.below(k);
    if (slot >= keep) {
      ++out.skipped_rounds;
      continue;
    }
    const auto [gain, e] = ranked[slot];
    chosen[e] = true;
    res.set.push_back(e);
    res.value += gain;
    out.added_marginals.push_back(gain);
  }
  res.queries = oracle.query_count() - start;
  return out;
}

}  // namespace submod
