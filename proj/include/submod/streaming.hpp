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

#ifndef SUBMOD_STREAMING_HPP_
#define SUBMOD_STREAMING_HPP_

#include <cstddef>

#include "submod/core.hpp"

namespace submod {

// One pass over a stream, one element at a time. stored_elements() is the
// memory measure: the number of distinct input elements held right now.
class StreamingAlgorithm {
 public:
  virtual ~StreamingAlgorithm() = default;

  virtual void process(ElementId e) = 0;
  // Called once after the last element.
  virtual void finish() = 0;

  virtual std::size_t stored_elements() const = 0;
  virtual Subset solution() const = 0;
};

}  // namespace submod

#endif  // SUBMOD_STREAMING_HPP_
