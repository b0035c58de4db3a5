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

#include "pancake/gp_stats.hpp"

#include <cstdlib>

namespace pancake {

bool is_adjacency(const Permutation& p, int j) {
  const int n = p.degree();
  if (j < 1 || j >= n) return false;
  const int a = p[j - 1];
  const int b = p[j];
  if (std::abs(a - b) == 1) return true;
  return (a == 1 && b == n) || (a == n && b == 1);
}

GpStats gp_stats(const Permutation& p) {
  const int n = p.degree();
  GpStats stats;
  std::vector<bool> adj(n + 1, false);  // adj[j]: (j, j+1) is an adjacency
  for (int j = 1; j < n; ++j) {
    if (is_adjacency(p, j)) {
      adj[j] = true;
      stats.adjacency_positions.push_back(j);
    }
  }
  for (int j = 1; j < n;) {
    if (!adj[j]) {
      ++j;
      continue;
    }
    int end = j;
    while (end + 1 < n && adj[end + 1]) ++end;
    stats.blocks.push_back({j, end + 1});
    j = end + 1;
  }
  for (int j = 1; j <= n; ++j) {
    const bool right = j < n && adj[j];
    const bool left = j > 1 && adj[j - 1];
    if (!right && !left) stats.free_positions.push_back(j);
  }
  return stats;
}

}  // namespace pancake
