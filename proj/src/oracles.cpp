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

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "submod/errors.hpp"

namespace submod {

void CoverageInstance::validate() const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& items = sets[i];
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (items[j] >= universe_size) {
        throw InputError("set " + std::to_string(i) + " references item " +
                         std::to_string(items[j]) + " outside universe of " +
                         std::to_string(universe_size));
      }
      if (j > 0 && items[j - 1] >= items[j]) {
        throw InputError("set " + std::to_string(i) +
                         " is not sorted and duplicate-free");
      }
    }
  }
}

CoverageFunction::CoverageFunction(CoverageInstance instance)
    : instance_(std::move(instance)),
      words_((instance_.universe_size + 63) / 64) {
  instance_.validate();
}

double CoverageFunction::evaluate(std::span<const ElementId> set) const {
  if (set.empty()) return 0.0;
  if (set.size() == 1) {
    return static_cast<double>(instance_.sets[set[0]].size());
  }
  thread_local std::vector<std::uint64_t> bits;
  bits.assign(words_, 0);
  for (ElementId e : set) {
    for (std::uint32_t item : instance_.sets[e]) {
      bits[item >> 6] |= std::uint64_t{1} << (item & 63);
    }
  }
  std::size_t covered = 0;
  for (std::uint64_t word : bits) covered += std::popcount(word);
  return static_cast<double>(covered);
}

CutFunction::CutFunction(CutInstance instance) : instance_(std::move(instance)) {
  for (auto& edge : instance_.edges) {
    if (edge.u == edge.v) throw InputError("cut instance has a self-loop");
    if (edge.u > edge.v) std::swap(edge.u, edge.v);
    if (edge.v >= instance_.vertex_count) {
      throw InputError("edge endpoint outside vertex range");
    }
    if (!(edge.weight >= 0.0)) throw InputError("negative edge weight");
  }
}

double CutFunction::evaluate(std::span<const ElementId> set) const {
  if (set.empty()) return 0.0;
  thread_local std::vector<char> inside;
  inside.assign(instance_.vertex_count, 0);
  for (ElementId v : set) inside[v] = 1;
  double total = 0.0;
  for (const auto& edge : instance_.edges) {
    if (inside[edge.u] != inside[edge.v]) total += edge.weight;
  }
  return total;
}

LogDetFunction::LogDetFunction(KernelInstance kernel)
    : kernel_(std::move(kernel)) {
  const auto& m = kernel_.matrix;
  if (m.rows() != m.cols()) throw InputError("kernel matrix is not square");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) {
        throw InputError("kernel matrix is not symmetric at (" +
                         std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  if (m.rows() > 0) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) {
      throw NumericError("kernel matrix is not positive definite");
    }
  }
}

double LogDetFunction::evaluate(std::span<const ElementId> set) const {
  if (set.empty()) return 0.0;
  const auto size = static_cast<Eigen::Index>(set.size());
  Eigen::MatrixXd sub(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      sub(i, j) = kernel_.matrix(set[i], set[j]);
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(sub);
  if (llt.info() != Eigen::Success) {
    std::string ids;
    for (ElementId e : set) ids += (ids.empty() ? "" : ",") + std::to_string(e);
    throw NumericError("principal submatrix {" + ids +
                       "} is not positive definite");
  }
  double log_det = 0.0;
  const auto& factor = llt.matrixLLT();
  for (Eigen::Index i = 0; i < size; ++i) log_det += std::log(factor(i, i));
  return 2.0 * log_det;
}

CoverageInstance ParseFimi(std::istream& in) {
  CoverageInstance instance;
  std::string line;
  std::size_t line_number = 0;
  std::uint32_t max_item = 0;
  bool any_item = false;
  while (std::getline(in, line)) {
    ++line_number;
    std::vector<std::uint32_t> items;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p == end) break;
      const char* token_end = p;
      while (token_end < end && *token_end != ' ' && *token_end != '\t' &&
             *token_end != '\r') {
        ++token_end;
      }
      std::uint32_t item = 0;
      auto [ptr, ec] = std::from_chars(p, token_end, item);
      if (ec != std::errc() || ptr != token_end) {
        throw ParseError(line_number, "expected a nonnegative integer, got '" +
                                          std::string(p, token_end) + "'");
      }
      items.push_back(item);
      p = token_end;
    }
    if (items.empty()) continue;
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    max_item = std::max(max_item, items.back());
    any_item = true;
    instance.sets.push_back(std::move(items));
  }
  instance.universe_size = any_item ? std::size_t{max_item} + 1 : 0;
  return instance;
}

CoverageInstance ParseFimiFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open dataset '" + path + "'");
  return ParseFimi(in);
}

void WriteFimi(const CoverageInstance& instance, std::ostream& out) {
  for (const auto& items : instance.sets) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (j > 0) out << ' ';
      out << items[j];
    }
    out << '\n';
  }
}

KernelInstance ReadKernel(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing dimension line");
  std::size_t n = 0;
  {
    std::istringstream header(line);
    if (!(header >> n)) throw ParseError(1, "dimension is not an integer");
  }
  KernelInstance kernel;
  kernel.matrix.resize(static_cast<Eigen::Index>(n),
                       static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError(i + 2, "expected " + std::to_string(n) + " rows");
    }
    std::istringstream row(line);
    for (std::size_t j = 0; j < n; ++j) {
      double value = 0.0;
      if (!(row >> value)) {
        throw ParseError(i + 2, "expected " + std::to_string(n) + " numbers");
      }
      kernel.matrix(static_cast<Eigen::Index>(i),
                    static_cast<Eigen::Index>(j)) = value;
    }
  }
  return kernel;
}

KernelInstance ReadKernelFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open kernel '" + path + "'");
  return ReadKernel(in);
}

void WriteKernel(const KernelInstance& kernel, std::ostream& out) {
  const auto n = kernel.matrix.rows();
  out << n << '\n';
  char buffer[32];
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer),
                                     kernel.matrix(i, j));
      if (j > 0) out << ' ';
      out.write(buffer, ptr - buffer);
    }
    out << '\n';
  }
}

KernelInstance BuildRandomKernel(std::size_t n, std::size_t rank,
                                 RngState rng) {
  if (rank < 1 || rank > n) throw InputError("kernel rank must be in [1, n]");
  RngCursor cursor(rng.substream(streams::kKernel));
  Eigen::MatrixXd factor(static_cast<Eigen::Index>(n),
                         static_cast<Eigen::Index>(rank));
  for (Eigen::Index i = 0; i < factor.rows(); ++i) {
    for (Eigen::Index j = 0; j < factor.cols(); ++j) {
      factor(i, j) = cursor.normal();
    }
  }
  KernelInstance kernel;
  kernel.matrix = factor * factor.transpose();
  // The product is symmetric up to rounding; make it exactly so.
  kernel.matrix = 0.5 * (kernel.matrix + kernel.matrix.transpose()).eval();
  kernel.matrix.diagonal().array() += 1e-3;
  return kernel;
}

CoverageInstance RandomCoverage(std::size_t sets, std::size_t universe,
                                double density, RngState rng) {
  if (universe == 0) throw InputError("universe must be nonempty");
  RngCursor cursor(rng.substream(streams::kSynthetic));
  CoverageInstance instance;
  instance.universe_size = universe;
  instance.sets.resize(sets);
  for (auto& items : instance.sets) {
    for (std::uint32_t item = 0; item < universe; ++item) {
      if (cursor.uniform() < density) items.push_back(item);
    }
    if (items.empty()) {
      items.push_back(static_cast<std::uint32_t>(cursor.below(universe)));
    }
  }
  return instance;
}

CutInstance RandomCut(std::size_t vertices, double edge_probability,
                      int max_weight, RngState rng) {
  RngCursor cursor(rng.substream(streams::kSynthetic));
  CutInstance instance;
  instance.vertex_count = vertices;
  for (std::uint32_t u = 0; u < vertices; ++u) {
    for (std::uint32_t v = u + 1; v < vertices; ++v) {
      if (cursor.uniform() < edge_probability) {
        const double weight =
            1.0 + static_cast<double>(cursor.below(
                      static_cast<std::uint64_t>(std::max(max_weight, 1))));
        instance.edges.push_back({u, v, weight});
      }
    }
  }
  return instance;
}

CoverageInstance AttributeValueCoverage(
    std::size_t records, std::span<const std::size_t> cardinalities,
    RngState rng) {
  RngCursor cursor(rng.substream(streams::kSynthetic));
  // Per attribute: cumulative distribution of log-normal value weights.
  std::vector<std::vector<double>> cdfs;
  std::vector<std::uint32_t> offsets;
  std::uint32_t offset = 0;
  for (std::size_t cardinality : cardinalities) {
    std::vector<double> cdf(cardinality);
    double total = 0.0;
    for (auto& weight : cdf) {
      weight = std::exp(1.5 * cursor.normal());
      total += weight;
    }
    double running = 0.0;
    for (auto& weight : cdf) {
      running += weight / total;
      weight = running;
    }
    cdfs.push_back(std::move(cdf));
    offsets.push_back(offset);
    offset += static_cast<std::uint32_t>(cardinality);
  }
  CoverageInstance instance;
  instance.universe_size = offset;
  instance.sets.resize(records);
  for (auto& items : instance.sets) {
    for (std::size_t a = 0; a < cdfs.size(); ++a) {
      const double u = cursor.uniform();
      const auto& cdf = cdfs[a];
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      const auto value = static_cast<std::uint32_t>(
          std::min<std::ptrdiff_t>(it - cdf.begin(),
                                   static_cast<std::ptrdiff_t>(cdf.size()) - 1));
      items.push_back(offsets[a] + value);
    }
  }
  return instance;
}

std::vector<std::size_t> ChessLikeCardinalities() {
  // 35 binary board features, one ternary feature, binary class.
  std::vector<std::size_t> cardinalities(35, 2);
  cardinalities.push_back(3);
  cardinalities.push_back(2);
  return cardinalities;
}

std::vector<std::size_t> MushroomLikeCardinalities() {
  // Class plus 22 attributes, counting only values that occur.
  return {2, 6, 4, 10, 2, 9, 2, 2, 2, 12, 2, 5, 4, 4, 9, 9, 1, 4, 3, 5, 9, 6, 7};
}

}  // namespace submod
