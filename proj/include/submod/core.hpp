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
//  Ground sets, value oracles and query accounting
//
// A SetFunction is an immutable description of f : 2^E -> R over the dense
// ground set {0, ..., n-1}. It can be shared by any number of concurrent runs.
// A ValueOracle is the per-run view of a SetFunction: it counts queries,
// enforces the weak-oracle cardinality limit, and can keep a transcript.

#ifndef SUBMOD_CORE_HPP_
#define SUBMOD_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "submod/rng.hpp"

namespace submod {

using ElementId = std::uint32_t;
using Subset = std::vector<ElementId>;

class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual std::size_t ground_size() const = 0;

  // f(S) for a duplicate-free list of ids. Must return 0 for the empty set.
  virtual double evaluate(std::span<const ElementId> set) const = 0;

  // True when f(S) <= f(T) for all S subset of T.
  virtual bool monotone() const = 0;

  virtual std::string name() const = 0;
};

enum class OracleMode { kWeak, kStrong };

struct QueryRecord {
  Subset set;
  double value = 0.0;
};

class ValueOracle {
 public:
  // In weak mode every queried set must have at most `k_limit` elements.
  explicit ValueOracle(const SetFunction& f,
                       OracleMode mode = OracleMode::kStrong,
                       std::size_t k_limit = 0);

  double eval(std::span<const ElementId> set);

  // f(e | S) = f(S + e) - f(S). Two queries.
  double marginal(ElementId e, std::span<const ElementId> set);
  // Same, with f(S) supplied by the caller. One query.
  double marginal(ElementId e, std::span<const ElementId> set, double f_set);

  const SetFunction& function() const { return *f_; }
  std::size_t ground_size() const { return f_->ground_size(); }
  OracleMode mode() const { return mode_; }
  std::size_t k_limit() const { return k_limit_; }

  std::uint64_t query_count() const { return query_count_; }
  std::size_t max_query_size() const { return max_query_size_; }

  void set_record_transcript(bool on) { record_ = on; }
  const std::vector<QueryRecord>& transcript() const { return transcript_; }

 private:
  const SetFunction* f_;
  OracleMode mode_;
  std::size_t k_limit_;
  std::uint64_t query_count_ = 0;
  std::size_t max_query_size_ = 0;
  bool record_ = false;
  std::vector<QueryRecord> transcript_;
  Subset scratch_;
};

// Arrival order of the ground set, reproducible from its seed.
struct StreamOrder {
  std::vector<ElementId> permutation;
  std::uint64_t seed = 0;

  std::size_t size() const { return permutation.size(); }
};

// Fisher-Yates over the counter-based generator.
StreamOrder RandomPermutation(std::size_t n, RngState rng);

// Identity order, for tests that want adversarial or fixed arrival.
StreamOrder FixedOrder(std::vector<ElementId> permutation);

struct OptimumResult {
  Subset set;
  double value = 0.0;
};

// C(n, k) as a double; exact for the magnitudes the size guard allows.
double BinomialCoefficient(std::size_t n, std::size_t k);

inline constexpr double kBruteForceLimit = 1e7;

// max_{|S| <= k} f(S) by enumeration in lexicographic order; the first
// maximizer found (the lexicographically smallest id sequence) is kept.
// Throws SizeGuardError when C(n, k) exceeds kBruteForceLimit.
OptimumResult BruteForceOptimum(ValueOracle& oracle, std::size_t n,
                                std::size_t k);

// Simple modular function f(S) = sum of weights; monotone iff all w >= 0.
class AdditiveFunction final : public SetFunction {
 public:
  explicit AdditiveFunction(std::vector<double> weights);

  std::size_t ground_size() const override { return weights_.size(); }
  double evaluate(std::span<const ElementId> set) const override;
  bool monotone() const override { return monotone_; }
  std::string name() const override { return "additive"; }

 private:
  std::vector<double> weights_;
  bool monotone_;
};

}  // namespace submod

#endif  // SUBMOD_CORE_HPP_
