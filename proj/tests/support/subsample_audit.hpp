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

// Monte Carlo audit of the non-monotone candidate probability.
//
// Given the decisions of windows 1..i-1, e is a candidate of window i with
// probability 1/m whenever those decisions leave room for e to arrive in
// window i: its actual window j is >= i, or e was in an earlier window j but
// got rejected there. Without that conditioning the probability is smaller:
// an element picked early cannot be a candidate later.

#ifndef SUBMOD_TESTS_SUPPORT_SUBSAMPLE_AUDIT_HPP_
#define SUBMOD_TESTS_SUPPORT_SUBSAMPLE_AUDIT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "submod/nonmonotone.hpp"

namespace submod_test {

struct CandidateTally {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t runs = 0;
  // Cell e * m + (i - 1).
  std::vector<double> hits;
  std::vector<double> compatible;

  // Largest |hits - N p| / sqrt(N p (1 - p)) over cells, N = compatible.
  double max_conditional_z() const {
    const double p = 1.0 / static_cast<double>(m);
    double worst = 0.0;
    for (std::size_t c = 0; c < hits.size(); ++c) {
      const double sd = std::sqrt(compatible[c] * p * (1.0 - p));
      worst = std::max(worst, std::abs(hits[c] - compatible[c] * p) / sd);
    }
    return worst;
  }

  // Same, with N = runs.
  double max_unconditional_z() const {
    const double p = 1.0 / static_cast<double>(m);
    const double sd = std::sqrt(runs * p * (1.0 - p));
    double worst = 0.0;
    for (double h : hits) worst = std::max(worst, std::abs(h - runs * p) / sd);
    return worst;
  }
};

// `seeds` independent runs of NonMonotoneStream on f with fresh random
// orders drawn from RngState{seed, stream}.
inline CandidateTally TallyCandidates(const submod::SetFunction& f,
                                      const submod::BandParams& params,
                                      std::uint64_t seeds,
                                      std::uint64_t stream) {
  const std::size_t n = f.ground_size();
  const std::size_t m = params.window_count();
  CandidateTally t{n, m, 0, std::vector<double>(n * m, 0.0),
                   std::vector<double>(n * m, 0.0)};
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    submod::ValueOracle oracle(f);
    const submod::RngState rng{seed, stream};
    const submod::StreamOrder order = submod::RandomPermutation(n, rng);
    submod::NonMonotoneStream s(oracle, n, params, rng,
                                submod::StreamOptions{true, false});
    for (submod::ElementId e : order.permutation) s.process(e);
    s.finish();
    ++t.runs;
    for (const submod::SubsampleDraw& d : s.draws()) {
      // Rejection sets are prefix-consistent, so the one for window m + 1
      // answers every window.
      const std::vector<std::size_t> rejected =
          s.rejection_set(d.element, m + 1);
      const bool rejected_at_arrival =
          std::find(rejected.begin(), rejected.end(), d.window) !=
          rejected.end();
      for (std::size_t i = 1; i <= m; ++i) {
        if (d.window < i && !rejected_at_arrival) continue;
        const std::size_t cell = d.element * m + (i - 1);
        t.compatible[cell] += 1.0;
        if (d.window == i && d.admitted) t.hits[cell] += 1.0;
      }
    }
  }
  return t;
}

}  // namespace submod_test

#endif  // SUBMOD_TESTS_SUPPORT_SUBSAMPLE_AUDIT_HPP_
