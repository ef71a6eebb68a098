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

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <memory>
#include <random>

#include "submod/baselines.hpp"
#include "submod/core.hpp"
#include "submod/errors.hpp"
#include "support/reference.hpp"

namespace submod {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_rational Rational(long num, long den) {
  return cpp_rational(num) / cpp_rational(den);
}

cpp_rational OneMinusPower(std::size_t k, std::size_t e) {
  cpp_rational miss(1);
  for (std::size_t i = 0; i < e; ++i) miss *= Rational(k - 1, k);
  return cpp_rational(1) - miss;
}

cpp_int Choose(unsigned n, unsigned r) {
  if (r > n) return 0;
  cpp_int out = 1;
  for (unsigned i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

TEST(HardnessValueTest, SmallKExamples) {
  EXPECT_EQ(HardnessValue<cpp_rational>(0, 4, 4), Rational(175, 256));
  EXPECT_EQ(HardnessValue<cpp_rational>(4, 0, 4), Rational(13, 16));
  EXPECT_EQ(HardnessValue<cpp_rational>(1, 1, 4), Rational(7, 16));
  EXPECT_DOUBLE_EQ(HardnessValue<double>(0, 4, 4), 0.68359375);
  EXPECT_DOUBLE_EQ(HardnessValue<double>(4, 0, 4), 0.8125);
}

TEST(HardnessValueTest, UpToTwoGoodSetsLookBad) {
  for (std::size_t k = 2; k <= 20; ++k) {
    for (std::size_t g = 0; g <= 2; ++g) {
      for (std::size_t b = 0; b <= 50; ++b) {
        EXPECT_EQ(HardnessValue<cpp_rational>(g, b, k), OneMinusPower(k, g + b))
            << "g " << g << " b " << b << " k " << k;
      }
    }
    const cpp_rational kk(static_cast<long>(k));
    EXPECT_EQ(HardnessValue<cpp_rational>(k, 0, k),
              cpp_rational(1) - 1 / kk + 1 / (kk * kk));
  }
}

TEST(HardnessValueTest, AgreesWithSampledCoverage) {
  std::mt19937_64 gen(2026);
  constexpr std::size_t kPoints = 200000;
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 12)(gen);
    const std::size_t g = std::uniform_int_distribution<std::size_t>(0, k)(gen);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(0, 15)(gen);
    const double exact = HardnessValue<double>(g, b, k);
    const double sampled =
        submod_test::SampledHardnessCoverage(g, b, k, kPoints, gen);
    const double sigma = std::sqrt(exact * (1.0 - exact) / kPoints);
    EXPECT_LE(std::abs(sampled - exact), 4.0 * sigma + 1e-12)
        << "g " << g << " b " << b << " k " << k;
  }
}

TEST(HardnessValueTest, MonotoneAndDiminishingOnTheGrid) {
  for (std::size_t k = 2; k <= 20; ++k) {
    for (std::size_t g = 0; g <= k; ++g) {
      for (std::size_t b = 0; b <= 30; ++b) {
        const double v = HardnessValue<double>(g, b, k);
        const double add_bad = HardnessValue<double>(g, b + 1, k) - v;
        EXPECT_GE(add_bad, 0.0);
        if (b + 1 <= 30) {
          EXPECT_LE(HardnessValue<double>(g, b + 2, k) -
                        HardnessValue<double>(g, b + 1, k),
                    add_bad + 1e-12);
        }
        if (g < k) {
          const double add_good = HardnessValue<double>(g + 1, b, k) - v;
          EXPECT_GE(add_good, 0.0);
          EXPECT_LE(HardnessValue<double>(g + 1, b + 1, k) -
                        HardnessValue<double>(g, b + 1, k),
                    add_good + 1e-12);
          EXPECT_LE(HardnessValue<double>(g + 1, b + 1, k) -
                        HardnessValue<double>(g + 1, b, k),
                    add_bad + 1e-12);
          if (g + 2 <= k) {
            EXPECT_LE(HardnessValue<double>(g + 2, b, k) -
                          HardnessValue<double>(g + 1, b, k),
                      add_good + 1e-12);
          }
        }
      }
    }
  }
}

TEST(HardnessValueTest, RatioApproachesOneMinusOneOverE) {
  const double ratio =
      HardnessValue<double>(0, 100, 100) / HardnessValue<double>(100, 0, 100);
  EXPECT_NEAR(ratio, 1.0 - std::exp(-1.0), 1e-2);
}

TEST(HardnessFunctionTest, ValueDependsOnlyOnTheCounts) {
  const HardnessFunction f(40, 5, RngState{3, 0});
  Subset good;
  Subset bad;
  for (ElementId e = 0; e < 40; ++e) {
    const Subset one = {e};
    (f.good_count(one) == 1 ? good : bad).push_back(e);
  }
  ASSERT_EQ(good.size(), 5u);
  EXPECT_DOUBLE_EQ(f.evaluate(good), f.optimum());
  for (std::size_t g = 0; g <= 5; ++g) {
    for (std::size_t b = 0; b <= 6; ++b) {
      Subset a(good.begin(), good.begin() + g);
      a.insert(a.end(), bad.begin(), bad.begin() + b);
      Subset c(good.end() - g, good.end());
      c.insert(c.end(), bad.end() - b, bad.end());
      EXPECT_EQ(f.good_count(a), g);
      EXPECT_DOUBLE_EQ(f.evaluate(a), HardnessValue<double>(g, b, 5));
      EXPECT_DOUBLE_EQ(f.evaluate(a), f.evaluate(c));
    }
  }
}

TEST(HardnessFunctionTest, RejectsBadSizes) {
  EXPECT_THROW(HardnessFunction(10, 1, RngState{1, 0}), InputError);
  EXPECT_THROW(HardnessFunction(3, 4, RngState{1, 0}), InputError);
}

TEST(HypergeometricTest, MatchesTheExactSum) {
  const cpp_rational exact =
      cpp_rational(Choose(4, 2) * Choose(96, 3) + Choose(4, 3) * Choose(96, 2) +
                   Choose(4, 4) * Choose(96, 1)) /
      cpp_rational(Choose(100, 5));
  EXPECT_NEAR(HypergeometricTail(100, 4, 5, 2),
              static_cast<double>(exact), 1e-12);
  const LowerBound lb = PropLbBound(100, 4, 5, 3);
  EXPECT_NEAR(lb.p, static_cast<double>(exact), 1e-12);
  const double pk = 4 * lb.p;
  EXPECT_NEAR(lb.bound, (1 - pk) * HardnessValue<double>(0, 4, 4) + pk, 1e-12);
  EXPECT_FALSE(lb.vacuous);
}

TEST(HypergeometricTest, EdgeCases) {
  EXPECT_EQ(HypergeometricTail(10, 3, 4, 0), 1.0);
  EXPECT_EQ(HypergeometricTail(10, 3, 4, 4), 0.0);
  EXPECT_NEAR(HypergeometricTail(10, 3, 10, 3), 1.0, 1e-12);
}

TEST(PropLbBoundTest, MonotoneInTheBudget) {
  double previous = 0.0;
  for (std::size_t m = 0; m <= 300; m += 5) {
    const LowerBound lb = PropLbBound(2000, 9, m, 3);
    EXPECT_GE(lb.bound, previous - 1e-15);
    EXPECT_LE(lb.bound, 1.0);
    previous = lb.bound;
  }
  EXPECT_DOUBLE_EQ(PropLbBound(2000, 9, 0, 3).bound,
                   HardnessValue<double>(0, 9, 9));
  const LowerBound full = PropLbBound(2000, 9, 2000, 3);
  EXPECT_TRUE(full.vacuous);
  EXPECT_EQ(full.bound, 1.0);
}

TEST(AuditTest, FlagsQueriesWithRGoodSets) {
  const HardnessFunction f(30, 4, RngState{8, 0});
  Subset good;
  Subset bad;
  for (ElementId e = 0; e < 30; ++e) {
    const Subset one = {e};
    (f.good_count(one) == 1 ? good : bad).push_back(e);
  }
  std::vector<QueryRecord> ok = {{{good[0], bad[0], bad[1]}, 0.0},
                                 {{good[1], good[2]}, 0.0}};
  EXPECT_TRUE(IndistinguishabilityAudit(ok, f, 3));
  ok.push_back({{good[0], good[1], good[3]}, 0.0});
  EXPECT_FALSE(IndistinguishabilityAudit(ok, f, 3));
  EXPECT_TRUE(IndistinguishabilityAudit({}, f, 3));
}

TEST(MemoryBoundedTest, StoreAllAbortsOverBudget) {
  const HardnessFunction f(200, 4, RngState{1, 0});
  ValueOracle oracle(f);
  const StreamingFactory factory = [](ValueOracle& o) {
    return std::make_unique<StoreAllGreedy>(o, 4);
  };
  try {
    RunMemoryBounded(factory, oracle, 10, RandomPermutation(200, {2, 0}));
    FAIL() << "no abort";
  } catch (const MemoryBudgetExceeded& e) {
    EXPECT_EQ(e.stored(), 11u);
    EXPECT_EQ(e.position(), 10u);
  }
}

TEST(MemoryBoundedTest, StoreAllWithRoomRunsGreedy) {
  const HardnessFunction f(50, 4, RngState{1, 0});
  ValueOracle oracle(f);
  const StreamingFactory factory = [](ValueOracle& o) {
    return std::make_unique<StoreAllGreedy>(o, 4);
  };
  const BoundedRun r =
      RunMemoryBounded(factory, oracle, 50, RandomPermutation(50, {2, 0}));
  EXPECT_EQ(r.peak_stored, 50u);
  EXPECT_EQ(r.solution.size(), 4u);
  EXPECT_DOUBLE_EQ(r.value, f.evaluate(r.solution));
  // Two good sets look bad, so greedy can settle for f(0, k).
  EXPECT_GE(r.value, HardnessValue<double>(0, 4, 4));
}

TEST(MemoryBoundedTest, BufferedSieveStaysUnderTheBound) {
  constexpr std::size_t kN = 2000;
  constexpr std::size_t kK = 9;
  const std::size_t m =
      static_cast<std::size_t>(kN / (4.0 * std::pow(kK, 1.5)));
  const LowerBound lb = PropLbBound(kN, kK, m, 3);
  constexpr int kRuns = 60;
  std::vector<double> values;
  for (int i = 0; i < kRuns; ++i) {
    const RngState rng{static_cast<std::uint64_t>(i), 30};
    const HardnessFunction f(kN, kK, rng);
    ValueOracle oracle(f);
    const StreamingFactory factory = [m, k = kK](ValueOracle& o) {
      return std::make_unique<SieveStreaming>(o, k,
                                              SieveOptions{0.1, m});
    };
    const BoundedRun r =
        RunMemoryBounded(factory, oracle, m, RandomPermutation(kN, rng));
    EXPECT_LE(r.peak_stored, m);
    values.push_back(r.value);
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= kRuns;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  const double se = std::sqrt(var / (kRuns - 1) / kRuns);
  EXPECT_LE(mean, lb.bound + 3.0 * se);
}

}  // namespace
}  // namespace submod
