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

#include "pancake/sorter.hpp"

#include "pancake/error.hpp"

namespace pancake {

std::string FlipSequence::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < flips.size(); ++k) {
    if (k > 0) s += ' ';
    s += std::to_string(flips[k]);
  }
  return s;
}

FlipSequence greedy_sort(const Permutation& p) {
  FlipSequence f{p, {}};
  Permutation cur = p;
  for (int value = p.degree(); value >= 2; --value) {
    int pos = 0;
    while (cur[pos] != value) ++pos;
    if (pos + 1 == value) continue;  // already home
    if (pos != 0) {
      f.flips.push_back(pos + 1);
      cur = apply_reversal(cur, pos + 1);
    }
    f.flips.push_back(value);
    cur = apply_reversal(cur, value);
  }
  return f;
}

std::vector<Permutation> replay(const FlipSequence& f) {
  std::vector<Permutation> trace = {f.source};
  for (int i : f.flips) trace.push_back(apply_reversal(trace.back(), i));
  return trace;
}

bool verify_flip_sequence(const FlipSequence& f) {
  const int n = f.source.degree();
  if (static_cast<int>(f.flips.size()) > greedy_flip_bound(n)) return false;
  Permutation cur = f.source;
  for (int i : f.flips) {
    if (i < 2 || i > n) return false;
    cur = apply_reversal(cur, i);
  }
  return cur.is_identity();
}

}  // namespace pancake
