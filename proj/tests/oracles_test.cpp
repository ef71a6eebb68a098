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

#include "submod/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <tuple>

#include "submod/errors.hpp"
#include "support/reference.hpp"

namespace submod {
namespace {

using submod_test::AllValues;
using submod_test::IsMonotone;
using submod_test::IsSubmodular;

TEST(CoverageTest, EmptySetCoversNothing) {
  const CoverageFunction f(CoverageInstance{{{0, 1}, {1, 2}}, 3});
  EXPECT_EQ(f.evaluate({}), 0.0);
}

TEST(CoverageTest, OverlappingPair) {
  const CoverageFunction f(CoverageInstance{{{0, 1}, {1, 2}}, 3});
  const Subset both = {0, 1};
  EXPECT_EQ(f.evaluate(both), 3.0);
}

TEST(CoverageTest, AllSetsCoverEveryReferencedItem) {
  const CoverageFunction f(CoverageInstance{{{0, 4}, {4, 7}, {9}}, 12});
  const Subset all = {0, 1, 2};
  EXPECT_EQ(f.evaluate(all), 4.0);
}

TEST(CoverageTest, RejectsBadIndices) {
  const CoverageFunction f(CoverageInstance{{{0, 1}}, 2});
  ValueOracle oracle(f);
  const Subset bad = {1};
  EXPECT_THROW(oracle.eval(bad), InputError);
  EXPECT_THROW(CoverageFunction(CoverageInstance{{{0, 5}}, 3}), InputError);
  EXPECT_THROW(CoverageFunction(CoverageInstance{{{2, 1}}, 3}), InputError);
}

TEST(CoverageTest, AgreesWithSetUnion) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CoverageInstance inst =
        RandomCoverage(15, 200, 0.05, RngState{seed, 0});
    const CoverageFunction f(inst);
    const auto sets = submod_test::AsSets(inst);
    RngCursor cursor(RngState{seed, 77});
    for (int trial = 0; trial < 50; ++trial) {
      Subset s;
      for (ElementId e = 0; e < 15; ++e) {
        if (cursor.uniform() < 0.3) s.push_back(e);
      }
      EXPECT_EQ(f.evaluate(s), submod_test::UnionSize(sets, s));
    }
  }
}

TEST(CoverageTest, MonotoneAndSubmodularByEnumeration) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CoverageFunction f(RandomCoverage(10, 30, 0.15, RngState{seed, 0}));
    const auto values = AllValues(
        [&](const Subset& s) { return f.evaluate(s); }, 10);
    EXPECT_TRUE(IsMonotone(values, 10));
    EXPECT_TRUE(IsSubmodular(values, 10));
  }
  const CoverageFunction f(RandomCoverage(12, 40, 0.1, RngState{9, 0}));
  const auto values =
      AllValues([&](const Subset& s) { return f.evaluate(s); }, 12);
  EXPECT_TRUE(IsMonotone(values, 12));
  EXPECT_TRUE(IsSubmodular(values, 12));
}

TEST(CutTest, EmptyAndFullSetsCutNothing) {
  const CutFunction f(RandomCut(7, 0.5, 4, RngState{1, 0}));
  EXPECT_EQ(f.evaluate({}), 0.0);
  Subset all(7);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(f.evaluate(all), 0.0);
}

TEST(CutTest, UnitTriangleSingleVertex) {
  const CutFunction f(CutInstance{3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}});
  const Subset one = {1};
  EXPECT_EQ(f.evaluate(one), 2.0);
}

TEST(CutTest, NormalizesAndValidatesEdges) {
  const CutFunction f(CutInstance{3, {{2, 0, 1.5}}});
  EXPECT_EQ(f.instance().edges[0].u, 0u);
  EXPECT_EQ(f.instance().edges[0].v, 2u);
  EXPECT_THROW(CutFunction(CutInstance{3, {{1, 1, 1}}}), InputError);
  EXPECT_THROW(CutFunction(CutInstance{3, {{0, 1, -1}}}), InputError);
  EXPECT_THROW(CutFunction(CutInstance{3, {{0, 3, 1}}}), InputError);
}

TEST(CutTest, ComplementSymmetricSubmodularNotMonotone) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const std::size_t n = 9 + seed;
    const CutInstance inst = RandomCut(n, 0.4, 6, RngState{seed, 0});
    const CutFunction f(inst);
    const auto values =
        AllValues([&](const Subset& s) { return f.evaluate(s); }, n);
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      ASSERT_EQ(values[mask], values[full ^ mask]);
      ASSERT_EQ(values[mask], submod_test::CutWeight(
                                  inst, submod_test::MaskToSubset(mask)));
    }
    EXPECT_TRUE(IsSubmodular(values, n));
    if (!inst.edges.empty()) {
      EXPECT_FALSE(IsMonotone(values, n));
    }
  }
}

TEST(LogDetTest, EmptySingletonAndPair) {
  KernelInstance k;
  k.matrix.resize(2, 2);
  k.matrix << 2, 1, 1, 2;
  const LogDetFunction f(k);
  EXPECT_EQ(f.evaluate({}), 0.0);
  const Subset zero = {0};
  EXPECT_NEAR(f.evaluate(zero), std::log(2.0), 1e-15);
  const Subset both = {0, 1};
  EXPECT_NEAR(f.evaluate(both), std::log(3.0), 1e-14);
}

TEST(LogDetTest, RejectsAsymmetricOrIndefiniteKernels) {
  KernelInstance asym;
  asym.matrix.resize(2, 2);
  asym.matrix << 2, 1, 0.5, 2;
  EXPECT_THROW(LogDetFunction{asym}, InputError);
  KernelInstance indefinite;
  indefinite.matrix.resize(2, 2);
  indefinite.matrix << 1, 2, 2, 1;
  EXPECT_THROW(LogDetFunction{indefinite}, NumericError);
}

TEST(LogDetTest, SubmodularWithinTolerance) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const LogDetFunction f(BuildRandomKernel(8, 8, RngState{seed, 0}));
    const auto values =
        AllValues([&](const Subset& s) { return f.evaluate(s); }, 8);
    EXPECT_TRUE(IsSubmodular(values, 8, 1e-9));
  }
}

TEST(LogDetTest, MatchesEigenDeterminantOnSubsets) {
  const KernelInstance kernel = BuildRandomKernel(6, 4, RngState{3, 0});
  const LogDetFunction f(kernel);
  const Subset s = {1, 3, 4};
  Eigen::MatrixXd sub(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) sub(i, j) = kernel.matrix(s[i], s[j]);
  }
  EXPECT_NEAR(f.evaluate(s), std::log(sub.determinant()), 1e-9);
}

TEST(KernelTest, RandomKernelIsReproducibleAndPositiveDefinite) {
  const KernelInstance a = BuildRandomKernel(50, 10, RngState{5, 0});
  const KernelInstance b = BuildRandomKernel(50, 10, RngState{5, 0});
  ASSERT_EQ(a.dimension(), 50u);
  EXPECT_EQ(0, std::memcmp(a.matrix.data(), b.matrix.data(),
                           sizeof(double) * 2500));
  EXPECT_NO_THROW(LogDetFunction{a});
  const KernelInstance one = BuildRandomKernel(1, 1, RngState{5, 0});
  EXPECT_GT(one.matrix(0, 0), 0.0);
  EXPECT_NO_THROW(LogDetFunction{one});
}

TEST(KernelTest, TextRoundTripIsExact) {
  const KernelInstance a = BuildRandomKernel(7, 3, RngState{11, 0});
  std::stringstream text;
  WriteKernel(a, text);
  const KernelInstance b = ReadKernel(text);
  ASSERT_EQ(b.dimension(), 7u);
  EXPECT_TRUE(a.matrix == b.matrix);
}

TEST(FimiTest, MinimalFile) {
  std::istringstream in("0 1\n1 2\n");
  const CoverageInstance inst = ParseFimi(in);
  ASSERT_EQ(inst.sets.size(), 2u);
  EXPECT_EQ(inst.universe_size, 3u);
  EXPECT_EQ(inst.sets[1], (std::vector<std::uint32_t>{1, 2}));
}

TEST(FimiTest, CollapsesDuplicatesAndSkipsBlankLines) {
  std::istringstream in("3 1 3\n\n  \n2\t2 0 \n");
  const CoverageInstance inst = ParseFimi(in);
  ASSERT_EQ(inst.sets.size(), 2u);
  EXPECT_EQ(inst.sets[0], (std::vector<std::uint32_t>{1, 3}));
  EXPECT_EQ(inst.sets[1], (std::vector<std::uint32_t>{0, 2}));
  EXPECT_EQ(inst.universe_size, 4u);
}

TEST(FimiTest, EmptyInputGivesEmptyInstance) {
  std::istringstream in("");
  const CoverageInstance inst = ParseFimi(in);
  EXPECT_TRUE(inst.sets.empty());
  EXPECT_EQ(inst.universe_size, 0u);
}

TEST(FimiTest, BadTokenReportsLine) {
  std::istringstream in("0 1\n2 x 3\n");
  try {
    ParseFimi(in);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream negative("1 -2\n");
  EXPECT_THROW(ParseFimi(negative), ParseError);
}

TEST(FimiTest, WriteThenParseIsIdentity) {
  const CoverageInstance inst = RandomCoverage(30, 50, 0.1, RngState{2, 0});
  std::stringstream text;
  WriteFimi(inst, text);
  const CoverageInstance back = ParseFimi(text);
  EXPECT_EQ(back.sets, inst.sets);
}

// Real transaction files are picked up when present next to the sources.
TEST(FimiTest, PublishedDatasetShapes) {
  const std::filesystem::path dir =
      std::filesystem::path(SUBMOD_TEST_DATA_DIR) / ".." / ".." / "data";
  bool any = false;
  for (const auto& [name, sets, items] :
       {std::tuple{"chess.dat", 3196u, 75u},
        std::tuple{"mushroom.dat", 8124u, 119u}}) {
    const auto path = dir / name;
    if (!std::filesystem::exists(path)) continue;
    any = true;
    const CoverageInstance inst = ParseFimiFile(path.string());
    EXPECT_EQ(inst.sets.size(), sets);
    EXPECT_LE(inst.universe_size, items + 1);
  }
  if (!any) GTEST_SKIP() << "no FIMI files under data/";
}

TEST(AttributeValueTest, StandInsMatchTheTableShapes) {
  const auto chess = ChessLikeCardinalities();
  const auto mushroom = MushroomLikeCardinalities();
  EXPECT_EQ(std::accumulate(chess.begin(), chess.end(), std::size_t{0}), 75u);
  EXPECT_EQ(std::accumulate(mushroom.begin(), mushroom.end(), std::size_t{0}),
            119u);
  const CoverageInstance inst =
      AttributeValueCoverage(3196, chess, RngState{1, 0});
  EXPECT_EQ(inst.sets.size(), 3196u);
  EXPECT_EQ(inst.universe_size, 75u);
  EXPECT_NO_THROW(inst.validate());
  // One item per attribute in every record.
  for (const auto& items : inst.sets) {
    ASSERT_EQ(items.size(), chess.size());
    std::size_t offset = 0;
    for (std::size_t a = 0; a < chess.size(); ++a) {
      EXPECT_GE(items[a], offset);
      EXPECT_LT(items[a], offset + chess[a]);
      offset += chess[a];
    }
  }
}

}  // namespace
}  // namespace submod
