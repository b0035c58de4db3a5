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

#include <string>
#include <vector>

#include "pancake/permutation.hpp"

namespace pancake {

/// Reversal indices that turn `source` into the identity when applied in
/// order. The same sequence is a path from `source` to I_n in P_n.
struct FlipSequence {
  Permutation source;
  std::vector<int> flips;

  std::string to_string() const;  // space-separated indices
};

/// Moves the largest misplaced value to the front, then flips it home.
/// Uses at most 2n - 3 flips.
FlipSequence greedy_sort(const Permutation& p);

/// Intermediate permutations from source to the end of the sequence,
/// inclusive.
std::vector<Permutation> replay(const FlipSequence& f);

/// True iff replaying reaches the identity within 2n - 3 flips, every
/// index being a valid generator.
bool verify_flip_sequence(const FlipSequence& f);

inline int greedy_flip_bound(int n) { return n < 2 ? 0 : 2 * n - 3; }

}  // namespace pancake
