// Copyright 2026 The Littlewood Lab Authors.
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

#ifndef LITTLEWOOD_SRC_CORE_PARALLEL_HPP_
#define LITTLEWOOD_SRC_CORE_PARALLEL_HPP_

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include <cstddef>

namespace lw::detail {

// Work-stealing loop over [0, count). workers = 0 uses the TBB default.
// Callers write results by index, so the outcome does not depend on scheduling.
template <class Body>
void parallel_for_index(std::size_t count, std::size_t workers, Body&& body) {
  auto run = [&] {
    tbb::parallel_for(tbb::blocked_range<std::size_t>(0, count), [&](const tbb::blocked_range<std::size_t>& r) {
      for (std::size_t i = r.begin(); i != r.end(); ++i) body(i);
    });
  };
  if (workers == 0) {
    run();
  } else {
    tbb::task_arena arena(static_cast<int>(workers));
    arena.execute(run);
  }
}

}  // namespace lw::detail

#endif  // LITTLEWOOD_SRC_CORE_PARALLEL_HPP_
