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
//  Concrete set functions
//
// Max-coverage over an explicit set system (monotone), weighted graph cut
// (non-monotone) and log-determinant of principal submatrices (non-monotone,
// possibly negative). Plus readers and writers for the FIMI transaction
// format and dense kernel files, and a few synthetic instance generators.

#ifndef SUBMOD_ORACLES_HPP_
#define SUBMOD_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "submod/core.hpp"

namespace submod {

struct CoverageInstance {
  // sets[i] is the sorted, duplicate-free list of universe items of set i.
  std::vector<std::vector<std::uint32_t>> sets;
  std::size_t universe_size = 0;

  // Throws InputError on unsorted lists or items >= universe_size.
  void validate() const;
};

class CoverageFunction final : public SetFunction {
 public:
  explicit CoverageFunction(CoverageInstance instance);

  std::size_t ground_size() const override { return instance_.sets.size(); }
  // |union of the selected sets|, evaluated on a bitset over the universe.
  double evaluate(std::span<const ElementId> set) const override;
  bool monotone() const override { return true; }
  std::string name() const override { return "coverage"; }

  const CoverageInstance& instance() const { return instance_; }

 private:
  CoverageInstance instance_;
  std::size_t words_;
};

struct WeightedEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double weight = 0.0;
};

struct CutInstance {
  std::size_t vertex_count = 0;
  // Stored with u < v, no self-loops, weight >= 0.
  std::vector<WeightedEdge> edges;
};

class CutFunction final : public SetFunction {
 public:
  // Normalizes edge orientation; throws InputError on self-loops, negative
  // weights or out-of-range endpoints.
  explicit CutFunction(CutInstance instance);

  std::size_t ground_size() const override { return instance_.vertex_count; }
  double evaluate(std::span<const ElementId> set) const override;
  bool monotone() const override { return false; }
  std::string name() const override { return "cut"; }

  const CutInstance& instance() const { return instance_; }

 private:
  CutInstance instance_;
};

struct KernelInstance {
  Eigen::MatrixXd matrix;

  std::size_t dimension() const {
    return static_cast<std::size_t>(matrix.rows());
  }
};

class LogDetFunction final : public SetFunction {
 public:
  // Checks exact symmetry and positive-definiteness (Cholesky) up front.
  explicit LogDetFunction(KernelInstance kernel);

  std::size_t ground_size() const override { return kernel_.dimension(); }
  // log det(L_S) through a Cholesky factor; throws NumericError naming the
  // subset when L_S is not positive definite.
  double evaluate(std::span<const ElementId> set) const override;
  bool monotone() const override { return false; }
  std::string name() const override { return "logdet"; }

  const KernelInstance& kernel() const { return kernel_; }

 private:
  KernelInstance kernel_;
};

// One set per nonempty line of whitespace-separated nonnegative integers.
// universe_size is 1 + the largest item; duplicates within a line collapse.
CoverageInstance ParseFimi(std::istream& in);
CoverageInstance ParseFimiFile(const std::string& path);
void WriteFimi(const CoverageInstance& instance, std::ostream& out);

// "n" on the first line, then n rows of n numbers.
KernelInstance ReadKernel(std::istream& in);
KernelInstance ReadKernelFile(const std::string& path);
void WriteKernel(const KernelInstance& kernel, std::ostream& out);

// L = B B^T + 1e-3 I with B an n x rank matrix of standard normals.
KernelInstance BuildRandomKernel(std::size_t n, std::size_t rank,
                                 RngState rng);

// Each of `sets` sets picks every universe item independently with
// probability `density` (at least one item per set).
CoverageInstance RandomCoverage(std::size_t sets, std::size_t universe,
                                double density, RngState rng);

// Erdos-Renyi graph with integer weights drawn from 1..max_weight.
CutInstance RandomCut(std::size_t vertices, double edge_probability,
                      int max_weight, RngState rng);

// Categorical records encoded as transactions, the way the UCI tables are
// turned into FIMI files: attribute a with c_a values owns c_a consecutive
// items, and every record holds exactly one item per attribute. Values are
// drawn from a per-attribute skewed distribution.
CoverageInstance AttributeValueCoverage(
    std::size_t records, std::span<const std::size_t> cardinalities,
    RngState rng);

// Attribute layouts matching the chess (3196 x 75) and mushroom (8124 x 119)
// transaction files.
std::vector<std::size_t> ChessLikeCardinalities();
std::vector<std::size_t> MushroomLikeCardinalities();

}  // namespace submod

#endif  // SUBMOD_ORACLES_HPP_
