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

#include "submod/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "submod/errors.hpp"

namespace submod {

std::uint64_t RngCursor::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  unsigned __int128 product =
      static_cast<unsigned __int128>(next_bits()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(next_bits()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double RngCursor::normal() {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

ValueOracle::ValueOracle(const SetFunction& f, OracleMode mode,
                         std::size_t k_limit)
    : f_(&f), mode_(mode), k_limit_(k_limit) {}

double ValueOracle::eval(std::span<const ElementId> set) {
  if (mode_ == OracleMode::kWeak && set.size() > k_limit_) {
    throw OracleModeError("weak oracle queried with " +
                          std::to_string(set.size()) +
                          " elements; limit is " + std::to_string(k_limit_));
  }
  const std::size_t n = f_->ground_size();
  for (ElementId e : set) {
    if (e >= n) {
      throw InputError("element " + std::to_string(e) +
                       " outside ground set of size " + std::to_string(n));
    }
  }
  ++query_count_;
  max_query_size_ = std::max(max_query_size_, set.size());
  const double value = f_->evaluate(set);
  if (record_) transcript_.push_back({Subset(set.begin(), set.end()), value});
  return value;
}

double ValueOracle::marginal(ElementId e, std::span<const ElementId> set) {
  const double base = eval(set);
  return marginal(e, set, base);
}

double ValueOracle::marginal(ElementId e, std::span<const ElementId> set,
                             double f_set) {
  scratch_.assign(set.begin(), set.end());
  scratch_.push_back(e);
  return eval(scratch_) - f_set;
}

StreamOrder RandomPermutation(std::size_t n, RngState rng) {
  StreamOrder order;
  order.seed = rng.seed;
  order.permutation.resize(n);
  std::iota(order.permutation.begin(), order.permutation.end(), ElementId{0});
  RngCursor cursor(rng.substream(streams::kPermutation));
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(cursor.below(i));
    std::swap(order.permutation[i - 1], order.permutation[j]);
  }
  return order;
}

StreamOrder FixedOrder(std::vector<ElementId> permutation) {
  return StreamOrder{std::move(permutation), 0};
}

double BinomialCoefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(result);
}

namespace {

void Enumerate(ValueOracle& oracle, std::size_t n, std::size_t k,
               ElementId next, Subset& current, OptimumResult& best) {
  for (ElementId e = next; e < n; ++e) {
    current.push_back(e);
    const double value = oracle.eval(current);
    if (value > best.value) {
      best.value = value;
      best.set = current;
    }
    if (current.size() < k) Enumerate(oracle, n, k, e + 1, current, best);
    current.pop_back();
  }
}

}  // namespace

OptimumResult BruteForceOptimum(ValueOracle& oracle, std::size_t n,
                                std::size_t k) {
  k = std::min(k, n);
  if (BinomialCoefficient(n, k) > kBruteForceLimit) {
    throw SizeGuardError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                         ") exceeds the exhaustive-search limit");
  }
  OptimumResult best;
  best.value = oracle.eval(Subset{});
  if (k == 0) return best;
  Subset current;
  current.reserve(k);
  Enumerate(oracle, n, k, 0, current, best);
  return best;
}

AdditiveFunction::AdditiveFunction(std::vector<double> weights)
    : weights_(std::move(weights)),
      monotone_(std::all_of(weights_.begin(), weights_.end(),
                            [](double w) { return w >= 0.0; })) {}

double AdditiveFunction::evaluate(std::span<const ElementId> set) const {
  double total = 0.0;
  for (ElementId e : set) total += weights_[e];
  return total;
}

}  // namespace submod
