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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "submod/core.hpp"
#include "submod/errors.hpp"
#include "submod/oracles.hpp"
#include "support/reference.hpp"

namespace submod {
namespace {

TEST(GreedyTest, MatchesTheTextbookLoopOnCoverage) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 5 + seed % 40;
    const CoverageInstance inst =
        RandomCoverage(n, 30 + seed % 50, 0.1, RngState{seed, 0});
    const CoverageFunction f(inst);
    const auto sets = submod_test::AsSets(inst);
    const std::size_t k = 1 + seed % 8;
    ValueOracle naive_oracle(f);
    ValueOracle lazy_oracle(f);
    const BaselineResult naive = NaiveGreedy(naive_oracle, n, k);
    const BaselineResult lazy = LazyGreedy(lazy_oracle, n, k);
    const auto expected = submod_test::PlainGreedy(
        [&](const Subset& s) { return submod_test::UnionSize(sets, s); }, n, k);
    EXPECT_EQ(naive.set, expected.set) << "seed " << seed;
    EXPECT_EQ(lazy.set, naive.set) << "seed " << seed;
    EXPECT_EQ(lazy.value, naive.value);
    EXPECT_EQ(naive.value, expected.value);
    EXPECT_LE(lazy.queries, naive.queries);
    EXPECT_EQ(naive.queries, naive_oracle.query_count());
    EXPECT_EQ(lazy.queries, lazy_oracle.query_count());
  }
}

TEST(GreedyTest, MatchesTheTextbookLoopOnCuts) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 4 + seed % 20;
    const CutInstance inst = RandomCut(n, 0.3, 5, RngState{seed, 1});
    const CutFunction f(inst);
    const std::size_t k = 1 + seed % n;
    ValueOracle a(f);
    ValueOracle b(f);
    const BaselineResult naive = NaiveGreedy(a, n, k);
    const BaselineResult lazy = LazyGreedy(b, n, k);
    const auto expected = submod_test::PlainGreedy(
        [&](const Subset& s) { return submod_test::CutWeight(inst, s); }, n, k);
    EXPECT_EQ(naive.set, expected.set) << "seed " << seed;
    EXPECT_EQ(lazy.set, expected.set) << "seed " << seed;
  }
}

TEST(GreedyTest, WithinOneMinusOneOverEOfTheOptimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const CoverageInstance inst = RandomCoverage(12, 25, 0.15, {seed, 2});
    const CoverageFunction f(inst);
    const auto sets = submod_test::AsSets(inst);
    for (std::size_t k = 1; k <= 4; ++k) {
      ValueOracle oracle(f);
      const auto opt = submod_test::MaskOptimum(
          [&](const Subset& s) { return submod_test::UnionSize(sets, s); }, 12,
          k);
      EXPECT_GE(LazyGreedy(oracle, 12, k).value,
                (1.0 - std::exp(-1.0)) * opt.value);
    }
  }
}

TEST(GreedyTest, StopsWhenNothingHelps) {
  const AdditiveFunction f({0.0, 0.0, 0.0});
  ValueOracle oracle(f);
  EXPECT_TRUE(LazyGreedy(oracle, 3, 2).set.empty());
  EXPECT_TRUE(NaiveGreedy(oracle, 3, 2).set.empty());
}

TEST(SieveTest, StaysWithinTheLiveSetBoundAndTheGuarantee) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CoverageInstance inst = RandomCoverage(12, 25, 0.15, {seed, 3});
    const CoverageFunction f(inst);
    const auto sets = submod_test::AsSets(inst);
    const std::size_t k = 1 + seed % 4;
    const auto opt = submod_test::MaskOptimum(
        [&](const Subset& s) { return submod_test::UnionSize(sets, s); }, 12,
        k);
    ValueOracle oracle(f);
    const SieveOptions options{0.1, std::nullopt};
    SieveStreaming sieve(oracle, k, options);
    for (ElementId e : RandomPermutation(12, {seed, 4}).permutation) {
      sieve.process(e);
      EXPECT_LE(sieve.live_sets(), sieve.live_set_bound());
      EXPECT_EQ(sieve.stored_elements(), sieve.held_elements().size());
    }
    sieve.finish();
    EXPECT_LE(sieve.max_live_sets(), sieve.live_set_bound());
    const Subset s = sieve.solution();
    EXPECT_LE(s.size(), k);
    EXPECT_EQ(sieve.solution_value(), f.evaluate(s));
    EXPECT_GE(sieve.solution_value(), (0.5 - options.eps) * opt.value);
  }
}

TEST(SieveTest, AscendingModularWithOneSlot) {
  const AdditiveFunction f({1, 2, 3, 4, 5, 6, 7, 8});
  ValueOracle oracle(f);
  const BaselineResult r =
      RunSieve(oracle, FixedOrder({0, 1, 2, 3, 4, 5, 6, 7}), 1);
  ASSERT_EQ(r.set.size(), 1u);
  EXPECT_GE(r.value, (0.5 - 0.1) * 8.0);
}

TEST(SieveTest, SingleElement) {
  const AdditiveFunction f({3.0});
  ValueOracle oracle(f);
  const BaselineResult r = RunSieve(oracle, FixedOrder({0}), 2);
  EXPECT_EQ(r.set, (Subset{0}));
  EXPECT_EQ(r.value, 3.0);
}

TEST(SieveTest, BufferLimitIsRespected) {
  const CoverageInstance inst = RandomCoverage(200, 400, 0.02, {5, 0});
  const CoverageFunction f(inst);
  ValueOracle oracle(f);
  SieveStreaming sieve(oracle, 10, SieveOptions{0.1, 15});
  for (ElementId e : RandomPermutation(200, {6, 0}).permutation) {
    sieve.process(e);
    EXPECT_LE(sieve.stored_elements(), 15u);
  }
  EXPECT_LE(sieve.peak_stored(), 15u);
}

TEST(SieveTest, RejectsBadEps) {
  const AdditiveFunction f({1.0});
  ValueOracle oracle(f);
  EXPECT_THROW(SieveStreaming(oracle, 1, SieveOptions{0.0, std::nullopt}),
               InputError);
  EXPECT_THROW(SieveStreaming(oracle, 1, SieveOptions{1.0, std::nullopt}),
               InputError);
}

TEST(RandomGreedyTest, NeverAddsANonPositiveMarginal) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 4 + seed % 16;
    const CutInstance inst = RandomCut(n, 0.4, 5, RngState{seed, 7});
    const CutFunction f(inst);
    ValueOracle oracle(f);
    const std::size_t k = 1 + seed % 6;
    const RandomGreedyResult r = RandomGreedy(oracle, n, k, {seed, 8});
    EXPECT_EQ(r.added_marginals.size(), r.result.set.size());
    EXPECT_EQ(r.result.set.size() + r.skipped_rounds, k);
    for (double g : r.added_marginals) EXPECT_GT(g, 0.0);
    EXPECT_EQ(r.result.value, submod_test::CutWeight(inst, r.result.set));
  }
}

TEST(RandomGreedyTest, ZeroFunctionGivesTheEmptySet) {
  const AdditiveFunction f({0.0, 0.0, 0.0, 0.0});
  ValueOracle oracle(f);
  const RandomGreedyResult r = RandomGreedy(oracle, 4, 3, {1, 0});
  EXPECT_TRUE(r.result.set.empty());
  EXPECT_EQ(r.skipped_rounds, 3u);
}

TEST(RandomGreedyTest, SingleSlotPicksTheBest) {
  const AdditiveFunction f({1.0, 4.0, 2.0});
  ValueOracle oracle(f);
  const RandomGreedyResult r = RandomGreedy(oracle, 3, 1, {9, 0});
  EXPECT_EQ(r.result.set, (Subset{1}));
}

TEST(RandomGreedyTest, MeanBeatsOneOverEOfTheOptimum) {
  const CutInstance inst = RandomCut(10, 0.4, 5, RngState{42, 0});
  const CutFunction f(inst);
  const auto opt = submod_test::MaskOptimum(
      [&](const Subset& s) { return submod_test::CutWeight(inst, s); }, 10, 3);
  ASSERT_GT(opt.value, 0.0);
  double total = 0.0;
  constexpr int kSeeds = 10000;
  for (int seed = 0; seed < kSeeds; ++seed) {
    ValueOracle oracle(f);
    total += RandomGreedy(oracle, 10, 3,
                          {static_cast<std::uint64_t>(seed), 1})
                 .result.value;
  }
  EXPECT_GE(total / kSeeds, 0.36 * opt.value);
}

}  // namespace
}  // namespace submod
