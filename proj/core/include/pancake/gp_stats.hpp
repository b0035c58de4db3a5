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

#include <vector>

#include "pancake/permutation.hpp"

namespace pancake {

/// A maximal run of consecutive adjacencies, covering positions
/// first..last (1-based, inclusive). A block of k adjacencies covers k+1
/// positions.
struct Block {
  int first = 0;
  int last = 0;

  int length() const noexcept { return last - first + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Gates-Papadimitriou structure of a permutation. All positions are
/// 1-based as in one-line notation.
struct GpStats {
  /// j such that (j, j+1) is an adjacency.
  std::vector<int> adjacency_positions;
  std::vector<Block> blocks;
  /// j such that pi(j) takes part in no adjacency on either side.
  std::vector<int> free_positions;
};

/// (j, j+1) is an adjacency when |pi(j) - pi(j+1)| = 1 or when
/// {pi(j), pi(j+1)} = {1, n}. The {1, n} wrap rule is applied as stated;
/// it is broader than the original Gates-Papadimitriou definition.
bool is_adjacency(const Permutation& p, int j);

GpStats gp_stats(const Permutation& p);

}  // namespace pancake
