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

// bench run      --algo monotone,lazy_greedy --dataset chess.dat --k 1..20 ...
// bench hardness --n 2000 --k 9 --r 3 --runs 200
//
// Exit codes: 0 ok, 1 bad arguments, 2 dataset unreadable, 3 unknown
// algorithm, 4 output not writable.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submod/bench.hpp"
#include "submod/errors.hpp"

namespace {

using submod::InputError;

std::size_t ParseCount(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("bad k value '" + s + "'");
  }
  return v;
}

// "5", "1..20" or "5,10,20".
std::vector<std::size_t> ParseKRange(const std::string& text) {
  std::vector<std::size_t> ks;
  const std::size_t dots = text.find("..");
  if (dots != std::string::npos) {
    const std::size_t lo = ParseCount(text.substr(0, dots));
    const std::size_t hi = ParseCount(text.substr(dots + 2));
    if (lo > hi) throw InputError("empty k range '" + text + "'");
    for (std::size_t k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) ks.push_back(ParseCount(item));
  if (ks.empty()) throw InputError("empty k range");
  return ks;
}

std::vector<std::string> SplitList(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    std::stringstream in(item);
    std::string name;
    while (std::getline(in, name, ',')) {
      if (!name.empty()) out.push_back(name);
    }
  }
  return out;
}

void PrintSummaries(const std::vector<submod::Summary>& summaries) {
  std::printf("%-14s %4s %6s %14s %12s %10s %10s\n", "algorithm", "k", "runs",
              "value_mean", "value_var", "ratio_mean", "ratio_var");
  for (const auto& s : summaries) {
    std::printf("%-14s %4zu %6zu %14.6g %12.4g %10.4f %10.3g\n",
                s.algorithm.c_str(), s.k, s.count, s.value_mean,
                s.value_variance, s.ratio_mean, s.ratio_variance);
  }
}

int Run(const submod::ExperimentConfig& cfg, const std::string& out_path,
        const std::string& summary_path, bool quiet) {
  const auto records = submod::RunExperiment(cfg);
  const auto summaries = submod::Summarize(records);
  if (out_path.empty() || out_path == "-") {
    submod::WriteCsv(records, std::cout, submod::CsvMetadata(cfg));
  } else {
    submod::EmitCsv(records, out_path, submod::CsvMetadata(cfg));
  }
  if (!summary_path.empty()) {
    std::ofstream out(summary_path, std::ios::binary);
    if (!out) throw submod::IoError("cannot open " + summary_path);
    submod::WriteSummaryCsv(summaries, out);
    if (!out) throw submod::IoError("write to " + summary_path + " failed");
  }
  if (!quiet && !(out_path.empty() || out_path == "-")) {
    PrintSummaries(summaries);
  }
  return 0;
}

int Hardness(const submod::HardnessConfig& cfg, const std::string& out_path) {
  const auto report = submod::RunHardness(cfg);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw submod::IoError("cannot open " + out_path);
    submod::WriteHardnessCsv(report, out);
    if (!out) throw submod::IoError("write to " + out_path + " failed");
  }
  std::printf("n=%zu k=%zu m=%zu r=%zu runs=%zu algorithm=%s\n", cfg.n, cfg.k,
              report.m, cfg.r, cfg.runs, cfg.algorithm.c_str());
  std::printf("p=%.6g bound=%.6g%s\n", report.bound.p, report.bound.bound,
              report.bound.vacuous ? " (vacuous, clamped)" : "");
  std::printf("mean=%.6g stderr=%.3g aborted=%zu audit_fraction=%.4f\n",
              report.mean, report.stderr_mean, report.aborted,
              report.audit_fraction);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-order streaming submodular maximization benchmarks"};
  app.require_subcommand(1);

  submod::ExperimentConfig cfg;
  std::vector<std::string> algos;
  std::string k_range;
  std::string out_path;
  std::string summary_path;
  std::string reference = "lazy";
  std::size_t budget = 0;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "Run an experiment and emit a CSV");
  run->add_option("--algo", algos, "Algorithms, comma separated")
      ->required();
  run->add_option("--dataset", cfg.dataset, "FIMI/kernel path or synthetic:<kind>")
      ->required();
  run->add_option("--k", k_range, "k, a..b or a,b,c")->required();
  run->add_option("--alpha", cfg.alpha, "Windows per unit of k")
      ->capture_default_str();
  run->add_option("--eps", cfg.eps, "Sieve threshold spacing")
      ->capture_default_str();
  run->add_option("--band-const", cfg.band_const, "Band half-width constant")
      ->capture_default_str();
  run->add_option("--runs", cfg.runs, "Random orders per (algorithm, k)")
      ->capture_default_str();
  run->add_option("--seed", cfg.base_seed, "Base seed")->capture_default_str();
  run->add_option("--out", out_path, "CSV path; stdout when omitted");
  run->add_option("--summary", summary_path, "Per-(algorithm, k) summary CSV");
  run->add_option("--reference", reference, "Ratio reference")
      ->check(CLI::IsMember({"lazy", "brute"}))
      ->capture_default_str();
  run->add_option("--memory-budget", budget, "Sieve buffer cap");
  run->add_option("--threads", cfg.threads, "Worker threads (0: auto)");
  run->add_flag("--timing", cfg.timing, "Record wall time (non-reproducible)");
  run->add_flag("--quiet", quiet, "No summary table");

  submod::HardnessConfig hcfg;
  std::string hardness_out;
  auto* hard = app.add_subcommand("hardness", "Memory-bounded lower-bound harness");
  hard->add_option("--n", hcfg.n, "Sets")->capture_default_str();
  hard->add_option("--k", hcfg.k, "Good sets")->capture_default_str();
  hard->add_option("--m", hcfg.m, "Buffer budget (0: n / (4 k^1.5))")
      ->capture_default_str();
  hard->add_option("--r", hcfg.r, "Good sets needed to distinguish")
      ->capture_default_str();
  hard->add_option("--runs", hcfg.runs, "Random instances and orders")
      ->capture_default_str();
  hard->add_option("--seed", hcfg.seed, "Base seed")->capture_default_str();
  hard->add_option("--eps", hcfg.eps, "Sieve threshold spacing")
      ->capture_default_str();
  hard->add_option("--algo", hcfg.algorithm, "sieve or store_all")
      ->capture_default_str();
  hard->add_option("--out", hardness_out, "Per-run CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cfg.algorithms = SplitList(algos);
      cfg.ks = ParseKRange(k_range);
      cfg.reference = reference == "brute" ? submod::ReferenceMode::kBruteForce
                                           : submod::ReferenceMode::kLazyGreedy;
      if (run->count("--memory-budget") > 0) cfg.memory_budget = budget;
      return Run(cfg, out_path, summary_path, quiet);
    }
    return Hardness(hcfg, hardness_out);
  } catch (const submod::DatasetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const submod::UnknownAlgorithm& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const submod::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
