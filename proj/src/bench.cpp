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

#include "submod/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "submod/baselines.hpp"
#include "submod/errors.hpp"
#include "submod/monotone.hpp"
#include "submod/nonmonotone.hpp"
#include "submod/oracles.hpp"

namespace submod {

namespace {

using Options = std::map<std::string, std::string, std::less<>>;

Options ParseOptions(std::string_view text, const std::string& spec) {
  Options out;
  while (!text.empty()) {
    const std::size_t comma = text.find_first_of(",;");
    const std::string_view item = text.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw DatasetError("bad option '" + std::string(item) + "' in " + spec);
    }
    out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
  }
  return out;
}

template <typename T>
T Take(Options& opts, const std::string& key, T fallback,
       const std::string& spec) {
  auto it = opts.find(key);
  if (it == opts.end()) return fallback;
  T value{};
  const std::string& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DatasetError("bad value for " + key + " in " + spec);
  }
  opts.erase(it);
  return value;
}

void RequireConsumed(const Options& opts, const std::string& spec) {
  if (!opts.empty()) {
    throw DatasetError("unknown option '" + opts.begin()->first + "' in " +
                       spec);
  }
}

Dataset LoadSynthetic(const std::string& spec) {
  std::string_view rest = std::string_view(spec).substr(10);
  const std::size_t colon = rest.find(':');
  const std::string kind(rest.substr(0, colon));
  Options opts = ParseOptions(
      colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1),
      spec);
  const RngState rng{Take<std::uint64_t>(opts, "seed", 1, spec), 0};
  std::shared_ptr<const SetFunction> f;
  if (kind == "coverage") {
    const auto n = Take<std::size_t>(opts, "n", 200, spec);
    const auto universe = Take<std::size_t>(opts, "universe", 500, spec);
    const auto density = Take<double>(opts, "density", 0.02, spec);
    RequireConsumed(opts, spec);
    f = std::make_shared<CoverageFunction>(
        RandomCoverage(n, universe, density, rng));
  } else if (kind == "cut") {
    const auto n = Take<std::size_t>(opts, "n", 12, spec);
    const auto p = Take<double>(opts, "p", 0.4, spec);
    const auto w = Take<int>(opts, "max_weight", 5, spec);
    RequireConsumed(opts, spec);
    f = std::make_shared<CutFunction>(RandomCut(n, p, w, rng));
  } else if (kind == "kernel") {
    const auto n = Take<std::size_t>(opts, "n", 40, spec);
    const auto rank = Take<std::size_t>(opts, "rank", 10, spec);
    RequireConsumed(opts, spec);
    f = std::make_shared<LogDetFunction>(BuildRandomKernel(n, rank, rng));
  } else if (kind == "chess-like") {
    RequireConsumed(opts, spec);
    const auto cards = ChessLikeCardinalities();
    f = std::make_shared<CoverageFunction>(
        AttributeValueCoverage(3196, cards, rng));
  } else if (kind == "mushroom-like") {
    RequireConsumed(opts, spec);
    const auto cards = MushroomLikeCardinalities();
    f = std::make_shared<CoverageFunction>(
        AttributeValueCoverage(8124, cards, rng));
  } else {
    throw DatasetError("unknown synthetic dataset '" + kind + "'");
  }
  return {spec, std::move(f)};
}

// Wraps an algorithm run on one (k, run) cell.
struct Outcome {
  double value = 0.0;
  std::uint64_t queries = 0;
  std::size_t peak = 0;
};

Outcome RunOne(const std::string& name, const SetFunction& f, std::size_t k,
               const StreamOrder& order, RngState rng,
               const ExperimentConfig& cfg) {
  const std::size_t n = f.ground_size();
  if (name == "monotone" || name == "nonmonotone") {
    ValueOracle oracle(f, OracleMode::kWeak, k);
    const BandParams params{k, cfg.alpha, cfg.band_const};
    if (name == "monotone") {
      StreamResult r = RunMonotone(oracle, order, params, rng);
      return {r.best_value, oracle.query_count(), r.stats.peak_stored};
    }
    NonMonotoneResult r = RunNonMonotone(oracle, order, params, rng);
    return {r.run.best_value, oracle.query_count(), r.run.stats.peak_stored};
  }
  ValueOracle oracle(f);
  BaselineResult r;
  if (name == "lazy_greedy") {
    r = LazyGreedy(oracle, n, k);
  } else if (name == "naive_greedy") {
    r = NaiveGreedy(oracle, n, k);
  } else if (name == "sieve") {
    r = RunSieve(oracle, order, k, {cfg.eps, cfg.memory_budget});
  } else if (name == "random_greedy") {
    r = RandomGreedy(oracle, n, k, rng).result;
  } else {
    throw UnknownAlgorithm("unknown algorithm '" + name + "'");
  }
  return {r.value, oracle.query_count(), r.peak_stored};
}

// Dataset labels go into a CSV column.
std::string CsvSafe(std::string label) {
  std::replace(label.begin(), label.end(), ',', ';');
  return label;
}

std::size_t ThreadCount(const ExperimentConfig& cfg, std::size_t tasks) {
  std::size_t threads = cfg.threads;
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BENCH_THREADS")) {
      std::size_t cap = 0;
      const std::string_view s(env);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
      if (ec == std::errc() && ptr == s.data() + s.size() && cap > 0) {
        threads = std::min(threads, cap);
      }
    }
  }
  return std::max<std::size_t>(1, std::min(threads, tasks));
}

}  // namespace

Dataset LoadDataset(const std::string& spec) {
  try {
    if (spec.rfind("synthetic:", 0) == 0) return LoadSynthetic(spec);
    if (spec.size() > 7 && spec.ends_with(".kernel")) {
      return {spec, std::make_shared<LogDetFunction>(ReadKernelFile(spec))};
    }
    return {spec, std::make_shared<CoverageFunction>(ParseFimiFile(spec))};
  } catch (const DatasetError&) {
    throw;
  } catch (const ParseError& e) {
    throw DatasetError(spec + ": line " + std::to_string(e.line()) + ": " +
                       e.what());
  } catch (const std::exception& e) {
    throw DatasetError(spec + ": " + e.what());
  }
}

const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> names = {
      "lazy_greedy", "monotone",     "naive_greedy",
      "nonmonotone", "random_greedy", "sieve"};
  return names;
}

std::string_view ReferenceName(ReferenceMode mode) {
  return mode == ReferenceMode::kLazyGreedy ? "lazy_greedy" : "brute_force";
}

std::uint64_t NameHash(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void CheckAlgorithms(const ExperimentConfig& cfg) {
  const auto& known = KnownAlgorithms();
  for (const std::string& name : cfg.algorithms) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw UnknownAlgorithm("unknown algorithm '" + name + "'");
    }
  }
}

}  // namespace

std::vector<RunRecord> RunExperiment(const ExperimentConfig& cfg) {
  CheckAlgorithms(cfg);
  return RunExperiment(cfg, LoadDataset(cfg.dataset));
}

std::vector<RunRecord> RunExperiment(const ExperimentConfig& cfg,
                                     const Dataset& dataset) {
  CheckAlgorithms(cfg);
  if (cfg.algorithms.empty()) throw InputError("no algorithms given");
  if (cfg.ks.empty()) throw InputError("empty k range");
  if (cfg.runs == 0) throw InputError("run count must be at least 1");
  const SetFunction& f = *dataset.function;
  const std::size_t n = f.ground_size();
  if (n == 0) throw DatasetError(dataset.label + ": empty ground set");

  std::map<std::size_t, double> reference;
  for (std::size_t k : cfg.ks) {
    if (k == 0) throw InputError("k must be at least 1");
    ValueOracle oracle(f);
    reference[k] = cfg.reference == ReferenceMode::kLazyGreedy
                       ? LazyGreedy(oracle, n, k).value
                       : BruteForceOptimum(oracle, n, k).value;
  }

  struct Task {
    std::size_t algorithm;
    std::size_t k;
    std::size_t run;
  };
  std::vector<Task> tasks;
  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
    for (std::size_t k : cfg.ks) {
      for (std::size_t r = 0; r < cfg.runs; ++r) tasks.push_back({a, k, r});
    }
  }
  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        const Task& task = tasks[t];
        const std::string& name = cfg.algorithms[task.algorithm];
        const std::uint64_t seed = cfg.base_seed ^ task.run;
        const StreamOrder order = RandomPermutation(n, RngState{seed, 0});
        const RngState rng{seed ^ NameHash(name), 0};
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = RunOne(name, f, task.k, order, rng, cfg);
        const auto stop = std::chrono::steady_clock::now();
        RunRecord& rec = records[t];
        rec.algorithm = name;
        rec.dataset = CsvSafe(dataset.label);
        rec.k = task.k;
        rec.alpha = cfg.alpha;
        rec.eps = cfg.eps;
        rec.seed = seed;
        rec.value = o.value;
        const double ref = reference.at(task.k);
        rec.ratio = ref > 0.0 ? o.value / ref : 1.0;
        rec.queries = o.queries;
        rec.peak_memory = o.peak;
        rec.wall_ms = cfg.timing
                          ? std::chrono::duration_cast<std::chrono::milliseconds>(
                                stop - start)
                                .count()
                          : 0;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = ThreadCount(cfg, tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(),
            [](const RunRecord& a, const RunRecord& b) {
              return std::tie(a.algorithm, a.k, a.seed) <
                     std::tie(b.algorithm, b.k, b.seed);
            });
  return records;
}

std::vector<Summary> Summarize(const std::vector<RunRecord>& records) {
  std::map<std::pair<std::string, std::size_t>, std::vector<const RunRecord*>>
      groups;
  for (const RunRecord& r : records) groups[{r.algorithm, r.k}].push_back(&r);
  std::vector<Summary> out;
  for (const auto& [key, group] : groups) {
    Summary s;
    s.algorithm = key.first;
    s.k = key.second;
    s.count = group.size();
    for (const RunRecord* r : group) {
      s.value_mean += r->value;
      s.ratio_mean += r->ratio;
    }
    const auto count = static_cast<double>(s.count);
    s.value_mean /= count;
    s.ratio_mean /= count;
    if (s.count > 1) {
      for (const RunRecord* r : group) {
        s.value_variance += (r->value - s.value_mean) * (r->value - s.value_mean);
        s.ratio_variance += (r->ratio - s.ratio_mean) * (r->ratio - s.ratio_mean);
      }
      s.value_variance /= count - 1.0;
      s.ratio_variance /= count - 1.0;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string FormatReal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string CsvMetadata(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "# reference=" << ReferenceName(cfg.reference)
      << " eps=" << FormatReal(cfg.eps) << " alpha=" << FormatReal(cfg.alpha)
      << " band_const=" << FormatReal(cfg.band_const) << " runs=" << cfg.runs
      << " base_seed=" << cfg.base_seed << " dataset=" << cfg.dataset;
  if (cfg.memory_budget) out << " memory_budget=" << *cfg.memory_budget;
  return out.str();
}

void WriteCsv(const std::vector<RunRecord>& records, std::ostream& out,
              const std::string& metadata) {
  if (!metadata.empty()) out << metadata << '\n';
  out << kCsvHeader << '\n';
  for (const RunRecord& r : records) {
    out << r.algorithm << ',' << r.dataset << ',' << r.k << ','
        << FormatReal(r.alpha) << ',' << FormatReal(r.eps) << ',' << r.seed
        << ',' << FormatReal(r.value) << ',' << FormatReal(r.ratio) << ','
        << r.queries << ',' << r.peak_memory << ',' << r.wall_ms << '\n';
  }
}

void EmitCsv(const std::vector<RunRecord>& records, const std::string& path,
             const std::string& metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  WriteCsv(records, out, metadata);
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

namespace {

template <typename T>
T ParseField(const std::string& s, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DatasetError("csv line " + std::to_string(line) + ": bad field '" +
                       s + "'");
  }
  return value;
}

}  // namespace

std::vector<RunRecord> ParseCsv(std::istream& in) {
  std::vector<RunRecord> out;
  std::string line;
  std::size_t number = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kCsvHeader) {
        throw DatasetError("csv line " + std::to_string(number) +
                           ": unexpected header");
      }
      header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 11) {
      throw DatasetError("csv line " + std::to_string(number) +
                         ": expected 11 fields");
    }
    RunRecord r;
    r.algorithm = fields[0];
    r.dataset = fields[1];
    r.k = ParseField<std::size_t>(fields[2], number);
    r.alpha = ParseField<double>(fields[3], number);
    r.eps = ParseField<double>(fields[4], number);
    r.seed = ParseField<std::uint64_t>(fields[5], number);
    r.value = ParseField<double>(fields[6], number);
    r.ratio = ParseField<double>(fields[7], number);
    r.queries = ParseField<std::uint64_t>(fields[8], number);
    r.peak_memory = ParseField<std::size_t>(fields[9], number);
    r.wall_ms = ParseField<std::int64_t>(fields[10], number);
    out.push_back(std::move(r));
  }
  return out;
}

HardnessReport RunHardness(const HardnessConfig& cfg) {
  if (cfg.runs == 0) throw InputError("run count must be at least 1");
  if (cfg.algorithm != "sieve" && cfg.algorithm != "store_all") {
    throw UnknownAlgorithm("unknown hardness algorithm '" + cfg.algorithm +
                           "'");
  }
  HardnessReport report;
  report.m = cfg.m;
  if (report.m == 0) {
    const double k = static_cast<double>(cfg.k);
    report.m = static_cast<std::size_t>(static_cast<double>(cfg.n) /
                                        (4.0 * k * std::sqrt(k)));
  }
  report.bound = PropLbBound(cfg.n, cfg.k, report.m, cfg.r);
  StreamingFactory factory;
  if (cfg.algorithm == "sieve") {
    SieveOptions options{cfg.eps, report.m};
    factory = [&cfg, options](ValueOracle& oracle) {
      return std::unique_ptr<StreamingAlgorithm>(
          new SieveStreaming(oracle, cfg.k, options));
    };
  } else {
    factory = [&cfg](ValueOracle& oracle) {
      return std::unique_ptr<StreamingAlgorithm>(
          new StoreAllGreedy(oracle, cfg.k));
    };
  }

  double sum = 0.0;
  std::size_t audits = 0;
  for (std::size_t i = 0; i < cfg.runs; ++i) {
    HardnessRun run;
    run.seed = cfg.seed ^ i;
    const RngState rng{run.seed, 0};
    const HardnessFunction instance(cfg.n, cfg.k, rng);
    const StreamOrder order = RandomPermutation(cfg.n, rng);
    ValueOracle oracle(instance);
    oracle.set_record_transcript(true);
    try {
      const BoundedRun result = RunMemoryBounded(factory, oracle, report.m, order);
      run.value = result.value;
      run.peak_memory = result.peak_stored;
      sum += run.value;
    } catch (const MemoryBudgetExceeded& e) {
      run.aborted = true;
      run.peak_memory = e.stored();
      ++report.aborted;
    }
    run.audit_passed =
        IndistinguishabilityAudit(oracle.transcript(), instance, cfg.r);
    audits += run.audit_passed ? 1 : 0;
    report.runs.push_back(run);
  }
  const std::size_t done = cfg.runs - report.aborted;
  if (done > 0) {
    const auto count = static_cast<double>(done);
    report.mean = sum / count;
    double squares = 0.0;
    for (const HardnessRun& run : report.runs) {
      if (!run.aborted) squares += (run.value - report.mean) * (run.value - report.mean);
    }
    if (done > 1) report.stderr_mean = std::sqrt(squares / (count - 1.0) / count);
  }
  report.audit_fraction =
      static_cast<double>(audits) / static_cast<double>(cfg.runs);
  return report;
}

void WriteHardnessCsv(const HardnessReport& report, std::ostream& out) {
  out << "# m=" << report.m << " p=" << FormatReal(report.bound.p)
      << " bound=" << FormatReal(report.bound.bound)
      << " vacuous=" << (report.bound.vacuous ? 1 : 0) << '\n';
  out << "seed,value,peak_memory,audit,aborted\n";
  for (const HardnessRun& r : report.runs) {
    out << r.seed << ',' << FormatReal(r.value) << ',' << r.peak_memory << ','
        << (r.audit_passed ? 1 : 0) << ',' << (r.aborted ? 1 : 0) << '\n';
  }
}

void WriteSummaryCsv(const std::vector<Summary>& summaries, std::ostream& out) {
  out << "algorithm,k,count,value_mean,value_variance,ratio_mean,"
         "ratio_variance\n";
  for (const Summary& s : summaries) {
    out << s.algorithm << ',' << s.k << ',' << s.count << ','
        << FormatReal(s.value_mean) << ',' << FormatReal(s.value_variance)
        << ',' << FormatReal(s.ratio_mean) << ','
        << FormatReal(s.ratio_variance) << '\n';
  }
}

}  // namespace submod
