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

#include "submod/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "submod/errors.hpp"

namespace submod {

WindowPartition::WindowPartition(std::vector<std::size_t> sizes)
    : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InputError("a partition needs at least 1 window");
  starts_.resize(sizes_.size() + 1, 0);
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    starts_[i + 1] = starts_[i] + sizes_[i];
  }
}

std::size_t WindowPartition::window_of(std::size_t position) const {
  if (position >= stream_length()) {
    throw InputError("stream position " + std::to_string(position) +
                     " out of range");
  }
  // First boundary strictly greater than the position closes its window.
  auto it = std::upper_bound(starts_.begin() + 1, starts_.end(), position);
  return static_cast<std::size_t>(it - starts_.begin());
}

WindowPartition PartitionStream(std::size_t n, std::size_t m, RngState rng) {
  if (m == 0) throw InputError("window count must be at least 1");
  std::vector<std::size_t> sizes(m, 0);
  RngCursor cursor(rng.substream(streams::kPartition));
  for (std::size_t draw = 0; draw < n; ++draw) ++sizes[cursor.below(m)];
  return WindowPartition(std::move(sizes));
}

ActiveWindowEstimate SimulateActiveWindows(std::size_t k, double alpha,
                                           double beta, std::size_t trials,
                                           RngState rng) {
  if (k == 0 || alpha < 1.0 || beta <= 0.0 || trials == 0) {
    throw InputError("active-window simulation needs k >= 1, alpha >= 1, "
                     "beta > 0 and at least one trial");
  }
  ActiveWindowEstimate estimate;
  estimate.windows = static_cast<std::size_t>(std::floor(alpha * beta));
  const double p = 1.0 / (alpha * static_cast<double>(k));
  RngCursor cursor(rng.substream(streams::kActiveWindows));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t active = 0;
    for (std::size_t w = 0; w < estimate.windows; ++w) {
      bool hit = false;
      for (std::size_t o = 0; o < k; ++o) {
        // Every optimal element gets its own coin, hit or not.
        if (cursor.uniform() < p) hit = true;
      }
      if (hit) ++active;
    }
    const auto count = static_cast<double>(active);
    sum += count;
    sum_sq += count * count;
  }
  const auto runs = static_cast<double>(trials);
  estimate.mean = sum / runs;
  if (trials > 1) {
    const double variance = (sum_sq - runs * estimate.mean * estimate.mean) /
                            (runs - 1.0);
    estimate.stdev = std::sqrt(std::max(variance, 0.0));
  }
  return estimate;
}

}  // namespace submod
