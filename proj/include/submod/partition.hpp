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
//  Window partitioning
//
// A stream of n positions is cut into m contiguous windows whose sizes are
// multinomial(n; 1/m, ..., 1/m): draw n independent uniform labels in 1..m
// and let window i take as many consecutive positions as there were labels
// equal to i. Under a uniformly random arrival order this is the same as
// dropping every element into one of m buckets independently.
//
// Windows are numbered 1..m throughout the library.

#ifndef SUBMOD_PARTITION_HPP_
#define SUBMOD_PARTITION_HPP_

#include <cstddef>
#include <vector>

#include "submod/rng.hpp"

namespace submod {

class WindowPartition {
 public:
  explicit WindowPartition(std::vector<std::size_t> sizes);

  std::size_t window_count() const { return sizes_.size(); }
  std::size_t stream_length() const { return starts_.back(); }

  // Size and first stream position of window i (1-based).
  std::size_t size(std::size_t window) const { return sizes_[window - 1]; }
  std::size_t start(std::size_t window) const { return starts_[window - 1]; }
  std::size_t end(std::size_t window) const { return starts_[window]; }

  const std::vector<std::size_t>& sizes() const { return sizes_; }

  // The window holding stream position p. Throws InputError if p >= n.
  std::size_t window_of(std::size_t position) const;

 private:
  std::vector<std::size_t> sizes_;
  // starts_[i] = total size of windows 1..i, so window i is
  // [starts_[i-1], starts_[i]).
  std::vector<std::size_t> starts_;
};

// Throws InputError when m == 0.
WindowPartition PartitionStream(std::size_t n, std::size_t m, RngState rng);

struct ActiveWindowEstimate {
  double mean = 0.0;
  double stdev = 0.0;
  std::size_t windows = 0;
};

// Monte Carlo over floor(alpha * beta) windows in which each of the k optimal
// elements is independently active with probability 1 / (alpha k); counts the
// windows holding at least one active optimal element.
ActiveWindowEstimate SimulateActiveWindows(std::size_t k, double alpha,
                                           double beta, std::size_t trials,
                                           RngState rng);

}  // namespace submod

#endif  // SUBMOD_PARTITION_HPP_
