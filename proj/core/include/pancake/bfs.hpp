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

#include <cstdint>
#include <vector>

#include "pancake/distance_field.hpp"
#include "pancake/permutation.hpp"

namespace pancake {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{1} << 30;

/// Largest degree searched without an explicit override.
inline constexpr int kDefaultMaxBfsDegree = 12;

struct BfsOptions {
  int workers = 1;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  /// Unlocks n = 13 (about 6 GiB of distance bytes).
  bool allow_large = false;
};

/// Bytes needed by a level-synchronous search of P_n: the distance field
/// plus the current and next frontier bitsets.
std::uint64_t bfs_required_bytes(int n);

/// Throws BudgetExceeded when a search of P_n is refused under `options`.
void check_bfs_budget(int n, const BfsOptions& options);

/// apply_reversal(p, i) for i = 2..n, in increasing i.
std::vector<Permutation> neighbors(const Permutation& p);

/// Level-synchronous breadth-first search of P_n from `source`.
///
/// The frontier is held in two bitsets over LexRanks. Each level is expanded
/// by `workers` threads over contiguous rank ranges; discovered vertices are
/// only marked in the next bitset and distances are committed in a separate
/// pass, so the result does not depend on the worker count.
DistanceField bfs(const Permutation& source, const BfsOptions& options = {});

/// Maximum distance from the identity, which equals diam(P_n).
int eccentricity_of_identity(int n, const BfsOptions& options = {});

}  // namespace pancake
