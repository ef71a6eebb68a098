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

#include "submod/hardness.hpp"

#include <algorithm>
#include <cmath>

#include "submod/baselines.hpp"
#include "submod/errors.hpp"

namespace submod {

namespace {

long double LogChoose(std::size_t n, std::size_t k) {
  return std::lgammal(static_cast<long double>(n) + 1) -
         std::lgammal(static_cast<long double>(k) + 1) -
         std::lgammal(static_cast<long double>(n - k) + 1);
}

}  // namespace

HardnessFunction::HardnessFunction(std::size_t n, std::size_t k, RngState rng)
    : n_(n), k_(k), good_(n, false) {
  if (k < 2 || k > n) {
    throw InputError("hardness instance needs 2 <= k <= n");
  }
  // First k entries of a uniform permutation.
  const StreamOrder order = RandomPermutation(n, rng.substream(streams::kHardness));
  for (std::size_t i = 0; i < k; ++i) good_[order.permutation[i]] = true;
}

std::size_t HardnessFunction::good_count(std::span<const ElementId> set) const {
  std::size_t g = 0;
  for (ElementId e : set) {
    if (e >= n_) throw InputError("element id out of range");
    g += good_[e] ? 1 : 0;
  }
  return g;
}

double HardnessFunction::evaluate(std::span<const ElementId> set) const {
  const std::size_t g = good_count(set);
  return HardnessValue<double>(g, set.size() - g, k_);
}

bool IndistinguishabilityAudit(const std::vector<QueryRecord>& transcript,
                               const HardnessFunction& instance,
                               std::size_t r) {
  return std::all_of(transcript.begin(), transcript.end(),
                     [&](const QueryRecord& q) {
                       return instance.good_count(q.set) < r;
                     });
}

double HypergeometricTail(std::size_t population, std::size_t marked,
                          std::size_t draws, std::size_t t) {
  if (marked > population || draws > population) {
    throw InputError("hypergeometric parameters out of range");
  }
  const std::size_t hi = std::min(marked, draws);
  const std::size_t lo = draws + marked > population
                             ? draws + marked - population
                             : 0;
  if (t <= lo) return 1.0;
  if (t > hi) return 0.0;
  const long double total = LogChoose(population, draws);
  long double sum = 0.0L;
  for (std::size_t j = t; j <= hi; ++j) {
    sum += std::exp(LogChoose(marked, j) +
                    LogChoose(population - marked, draws - j) - total);
  }
  return static_cast<double>(std::min(sum, 1.0L));
}

LowerBound PropLbBound(std::size_t n, std::size_t k, std::size_t m,
                       std::size_t r) {
  if (r == 0) throw InputError("r must be at least 1");
  if (m > n || k > n) throw InputError("need m <= n and k <= n");
  LowerBound out;
  out.p = HypergeometricTail(n, k, m, r - 1);
  const double pk = out.p * static_cast<double>(k);
  if (pk > 1.0) {
    out.vacuous = true;
    out.bound = 1.0;
    return out;
  }
  out.bound = (1.0 - pk) * HardnessValue<double>(0, k, k) + pk;
  return out;
}

MemoryBudgetExceeded::MemoryBudgetExceeded(std::size_t position,
                                           std::size_t stored,
                                           std::size_t budget)
    : std::runtime_error("memory budget " + std::to_string(budget) +
                         " exceeded at stream position " +
                         std::to_string(position) + " with " +
                         std::to_string(stored) + " stored elements"),
      position_(position),
      stored_(stored) {}

BoundedRun RunMemoryBounded(const StreamingFactory& factory,
                            ValueOracle& oracle, std::size_t budget,
                            const StreamOrder& order) {
  std::unique_ptr<StreamingAlgorithm> alg = factory(oracle);
  BoundedRun out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    alg->process(order.permutation[i]);
    const std::size_t stored = alg->stored_elements();
    out.peak_stored = std::max(out.peak_stored, stored);
    if (stored > budget) throw MemoryBudgetExceeded(i, stored, budget);
  }
  alg->finish();
  out.solution = alg->solution();
  out.value = oracle.function().evaluate(out.solution);
  return out;
}

void StoreAllGreedy::finish() {
  // Every element is held by now, so greedy over the full ground set is the
  // same as greedy over the buffer.
  solution_ = LazyGreedy(*oracle_, oracle_->ground_size(), k_).set;
}

}  // namespace submod
