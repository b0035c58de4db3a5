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

#include <algorithm>
#include <functional>
#include <string>

#include "pancake/bound.hpp"
#include "pancake/error.hpp"

namespace pancake {
namespace {

void check_identity_field(const DistanceField& field) {
  if (field.source() != 0 || !field.complete()) {
    throw PreconditionError("a complete distance field from the identity is required; "
                            "run bfs first");
  }
}

}  // namespace

const char* to_string(MSetMethod method) noexcept {
  return method == MSetMethod::kExact ? "exact" : "chunked";
}

bool MSet::contains(Rank r) const noexcept {
  return std::binary_search(members.begin(), members.end(), r);
}

MSet build_mset_exact(const DistanceField& from_identity, int threshold) {
  check_identity_field(from_identity);
  if (threshold < 0) throw PreconditionError("threshold must be non-negative");
  MSet m;
  m.n = from_identity.degree();
  m.threshold = threshold;
  m.method = MSetMethod::kExact;
  for (Rank r = 0; r < from_identity.size(); ++r) {
    if (from_identity[r] >= threshold) m.members.push_back(r);
  }
  return m;
}

std::uint64_t nonbacktracking_word_count(int n, int length) {
  if (length <= 0) return 1;
  std::uint64_t count = static_cast<std::uint64_t>(n - 1);
  for (int k = 1; k < length; ++k) count *= static_cast<std::uint64_t>(n - 2);
  return count;
}

MSet build_mset_chunked(int n, int threshold, const ChunkOptions& options) {
  if (n < 3 || n > options.max_degree) {
    throw PreconditionError("chunked construction supports 3 <= n <= " +
                            std::to_string(options.max_degree));
  }
  if (threshold < 0) throw PreconditionError("threshold must be non-negative");
  if (options.chunk_size < 1) throw PreconditionError("chunk size must be positive");

  std::vector<int> levels(threshold / options.chunk_size, options.chunk_size);
  if (const int r = threshold % options.chunk_size; r > 0) levels.push_back(r);

  const Rank total = factorial(n);
  std::vector<bool> removed(total, false);
  std::vector<std::uint32_t> interior_stamp(total, 0);
  std::vector<std::uint32_t> endpoint_stamp(total, 0);
  std::vector<Rank> starts = {rank(Permutation::identity(n))};
  std::uint32_t bundle = 0;
  std::uint64_t nodes_used = 0;

  for (const int length : levels) {
    std::uint64_t per_start = 0;
    for (int d = 0; d <= length; ++d) per_start += nonbacktracking_word_count(n, d);
    const std::uint64_t level_nodes = per_start * starts.size();
    if (nodes_used + level_nodes > options.node_budget) {
      throw NodeBudgetExceeded(nodes_used + level_nodes, options.node_budget,
                               "walk enumeration needs " +
                                   std::to_string(nodes_used + level_nodes) +
                                   " nodes, budget is " +
                                   std::to_string(options.node_budget));
    }
    nodes_used += level_nodes;

    std::vector<bool> is_next(total, false);
    std::vector<Rank> next_starts;
    std::vector<Rank> interior;
    for (const Rank start : starts) {
      ++bundle;
      interior.clear();
      // Walk every non-backtracking word of `length` letters from `start`.
      std::function<void(const Permutation&, int, int)> walk =
          [&](const Permutation& p, int depth, int last) {
            const Rank r = rank(p);
            if (depth == length) {
              endpoint_stamp[r] = bundle;
              if (!is_next[r]) {
                is_next[r] = true;
                next_starts.push_back(r);
              }
              return;
            }
            if (interior_stamp[r] != bundle) {
              interior_stamp[r] = bundle;
              interior.push_back(r);
            }
            for (int i = 2; i <= n; ++i) {
              if (i != last) walk(apply_reversal(p, i), depth + 1, i);
            }
          };
      walk(unrank(start, n), 0, 0);
      for (const Rank r : interior) {
        if (endpoint_stamp[r] != bundle) removed[r] = true;
      }
    }
    std::sort(next_starts.begin(), next_starts.end());
    starts = std::move(next_starts);
  }

  MSet m;
  m.n = n;
  m.threshold = threshold;
  m.method = MSetMethod::kChunked;
  for (Rank r = 0; r < total; ++r) {
    if (!removed[r]) m.members.push_back(r);
  }
  return m;
}

MSetComparison compare_msets(const MSet& exact, const MSet& chunked) {
  if (exact.n != chunked.n || exact.threshold != chunked.threshold) {
    throw PreconditionError("member sets differ in degree or threshold");
  }
  MSetComparison cmp;
  cmp.n = exact.n;
  cmp.threshold = exact.threshold;
  std::set_difference(exact.members.begin(), exact.members.end(), chunked.members.begin(),
                      chunked.members.end(), std::back_inserter(cmp.missing));
  std::set_difference(chunked.members.begin(), chunked.members.end(),
                      exact.members.begin(), exact.members.end(),
                      std::back_inserter(cmp.extra));
  return cmp;
}

}  // namespace pancake
