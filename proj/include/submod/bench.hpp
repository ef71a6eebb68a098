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

// Experiment driver behind the bench CLI.
//
// Seeding: run r of an experiment with base seed s streams the order drawn
// from s ^ r, shared by every algorithm, and gives each algorithm its own
// internal generator s ^ r ^ hash(name). The CSV reports s ^ r.

#ifndef SUBMOD_BENCH_HPP_
#define SUBMOD_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "submod/core.hpp"
#include "submod/hardness.hpp"

namespace submod {

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownAlgorithm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Dataset {
  std::string label;
  std::shared_ptr<const SetFunction> function;
};

// `path` (FIMI transactions, or a kernel matrix when it ends in ".kernel")
// or one of
//   synthetic:coverage[:n=,universe=,density=,seed=]
//   synthetic:cut[:n=,p=,max_weight=,seed=]
//   synthetic:kernel[:n=,rank=,seed=]
//   synthetic:chess-like[:seed=]
//   synthetic:mushroom-like[:seed=]
// Options may be separated by ',' or ';'. Throws DatasetError on anything
// unreadable.
Dataset LoadDataset(const std::string& spec);

// Algorithm names accepted by RunExperiment.
const std::vector<std::string>& KnownAlgorithms();

enum class ReferenceMode { kLazyGreedy, kBruteForce };

std::string_view ReferenceName(ReferenceMode mode);

struct ExperimentConfig {
  std::vector<std::string> algorithms;
  std::string dataset;
  std::vector<std::size_t> ks;
  double alpha = 10.0;
  double eps = 0.1;
  double band_const = 20.0;
  std::size_t runs = 10;
  std::uint64_t base_seed = 0;
  ReferenceMode reference = ReferenceMode::kLazyGreedy;
  // Caps the sieve's buffer; the other algorithms ignore it.
  std::optional<std::size_t> memory_budget;
  // Measure wall time; otherwise wall_ms is 0 and output is reproducible.
  bool timing = false;
  // 0 picks min(BENCH_THREADS, hardware threads).
  std::size_t threads = 0;
};

struct RunRecord {
  std::string algorithm;
  std::string dataset;
  std::size_t k = 0;
  double alpha = 0.0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  double value = 0.0;
  double ratio = 0.0;
  std::uint64_t queries = 0;
  std::size_t peak_memory = 0;
  std::int64_t wall_ms = 0;

  bool operator==(const RunRecord&) const = default;
};

// FNV-1a; stable across platforms.
std::uint64_t NameHash(std::string_view name);

// Throws UnknownAlgorithm, DatasetError, or InputError on a bad config.
// Records come back sorted by (algorithm, k, seed).
std::vector<RunRecord> RunExperiment(const ExperimentConfig& cfg);

// Same, on an already loaded dataset.
std::vector<RunRecord> RunExperiment(const ExperimentConfig& cfg,
                                     const Dataset& dataset);

struct Summary {
  std::string algorithm;
  std::size_t k = 0;
  std::size_t count = 0;
  double value_mean = 0.0;
  double value_variance = 0.0;  // unbiased; 0 for a single record
  double ratio_mean = 0.0;
  double ratio_variance = 0.0;
};

// One Summary per (algorithm, k), in that order.
std::vector<Summary> Summarize(const std::vector<RunRecord>& records);

inline constexpr std::string_view kCsvHeader =
    "algorithm,dataset,k,alpha,eps,seed,value,ratio,queries,peak_memory,"
    "wall_ms";

// "# key=value ..." describing a config; written above the header.
std::string CsvMetadata(const ExperimentConfig& cfg);

// Optional metadata comment line, header, then one row per record. Floats
// carry 10 significant digits; lines end in LF.
void WriteCsv(const std::vector<RunRecord>& records, std::ostream& out,
              const std::string& metadata = "");
// Throws IoError when the file cannot be written.
void EmitCsv(const std::vector<RunRecord>& records, const std::string& path,
             const std::string& metadata = "");

// Skips '#' lines; throws DatasetError on a malformed row.
std::vector<RunRecord> ParseCsv(std::istream& in);

void WriteSummaryCsv(const std::vector<Summary>& summaries, std::ostream& out);

struct HardnessConfig {
  std::size_t n = 2000;
  std::size_t k = 9;
  // Buffer budget; 0 means n / (4 k^1.5).
  std::size_t m = 0;
  std::size_t r = 3;
  std::size_t runs = 200;
  std::uint64_t seed = 0;
  double eps = 0.1;
  // "sieve" (budget-aware) or "store_all" (lazy greedy on a full buffer).
  std::string algorithm = "sieve";
};

struct HardnessRun {
  std::uint64_t seed = 0;
  double value = 0.0;
  std::size_t peak_memory = 0;
  bool audit_passed = false;
  bool aborted = false;
};

struct HardnessReport {
  std::size_t m = 0;
  LowerBound bound;
  std::vector<HardnessRun> runs;
  double mean = 0.0;
  double stderr_mean = 0.0;
  double audit_fraction = 0.0;
  std::size_t aborted = 0;
};

// Run i uses instance and order seed cfg.seed ^ i. Aborted runs count as
// value 0 and are excluded from the mean.
HardnessReport RunHardness(const HardnessConfig& cfg);

void WriteHardnessCsv(const HardnessReport& report, std::ostream& out);

// "%.10g".
std::string FormatReal(double x);

}  // namespace submod

#endif  // SUBMOD_BENCH_HPP_
