// Copyright 2026 The Pancake Toolkit Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace pancake::detail {

// Splits [0, count) into `workers` contiguous slices and runs
// fn(begin, end, worker) on each, joining before return. Runs inline for a
// single worker.
template <class Fn>
void parallel_slices(int workers, std::uint64_t count, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || count < 2) {
    fn(std::uint64_t{0}, count, 0);
    return;
  }
  const auto w = static_cast<std::uint64_t>(workers);
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::uint64_t t = 0; t < w; ++t) {
    const std::uint64_t begin = count * t / w;
    const std::uint64_t end = count * (t + 1) / w;
    threads.emplace_back([&fn, begin, end, t] { fn(begin, end, static_cast<int>(t)); });
  }
}

}  // namespace pancake::detail
