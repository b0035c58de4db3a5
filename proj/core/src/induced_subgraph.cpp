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
#include <limits>
#include <string>

#include "pancake/bound.hpp"
#include "pancake/error.hpp"
#include "parallel.hpp"

namespace pancake {
namespace {

constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();

// BFS confined to one component, reusing its buffers between roots.
class ComponentSearch {
 public:
  explicit ComponentSearch(const InducedSubgraph& g) : g_(g), dist_(g.vertex_count(), kFar) {}

  // Returns the eccentricity of `root`; distances stay readable via dist()
  // until the next call.
  std::uint32_t run(std::uint32_t root) {
    for (auto v : touched_) dist_[v] = kFar;
    touched_.clear();
    dist_[root] = 0;
    touched_.push_back(root);
    std::uint32_t ecc = 0;
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      const std::uint32_t v = touched_[head];
      const std::uint32_t d = dist_[v];
      ecc = std::max(ecc, d);
      for (auto w : g_.neighbors(v)) {
        if (dist_[w] == kFar) {
          dist_[w] = d + 1;
          touched_.push_back(w);
        }
      }
    }
    return ecc;
  }

  std::uint32_t dist(std::uint32_t v) const { return dist_[v]; }

 private:
  const InducedSubgraph& g_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint32_t> touched_;
};

// Exact diameter of one component by eccentricity bounding: every search
// from v tightens max(ecc(v) - d, d) <= ecc(w) <= ecc(v) + d for all w, and
// vertices whose upper bound cannot beat the best known eccentricity drop
// out of the candidate set.
std::uint32_t component_diameter(ComponentSearch& search,
                                 const std::vector<std::uint32_t>& vertices) {
  if (vertices.size() <= 1) return 0;
  const std::size_t size = vertices.size();
  std::vector<std::uint32_t> lower(size, 0);
  std::vector<std::uint32_t> upper(size, kFar);
  std::vector<std::size_t> candidates(size);
  for (std::size_t k = 0; k < size; ++k) candidates[k] = k;

  std::uint32_t best = 0;
  bool pick_upper = true;
  while (!candidates.empty()) {
    std::size_t chosen = candidates.front();
    for (auto k : candidates) {
      if (pick_upper ? upper[k] > upper[chosen] : lower[k] < lower[chosen]) chosen = k;
    }
    pick_upper = !pick_upper;

    const std::uint32_t ecc = search.run(vertices[chosen]);
    best = std::max(best, ecc);

    std::uint32_t max_upper = 0;
    std::size_t kept = 0;
    for (auto k : candidates) {
      const std::uint32_t d = search.dist(vertices[k]);
      lower[k] = std::max({lower[k], ecc >= d ? ecc - d : 0, d});
      upper[k] = std::min(upper[k], ecc + d);
      best = std::max(best, lower[k]);
      if (upper[k] > best && lower[k] != upper[k]) {
        candidates[kept++] = k;
        max_upper = std::max(max_upper, upper[k]);
      }
    }
    candidates.resize(kept);
    if (max_upper <= best) break;
  }
  return best;
}

}  // namespace

InducedSubgraph::InducedSubgraph(const MSet& m) : members_(m.members) {
  const int n = m.n;
  offsets_.reserve(members_.size() + 1);
  offsets_.push_back(0);
  for (const Rank r : members_) {
    const Permutation p = unrank(r, n);
    for (int i = 2; i <= n; ++i) {
      if (auto id = local_id(rank(apply_reversal(p, i)))) adjacency_.push_back(*id);
    }
    offsets_.push_back(adjacency_.size());
  }
}

std::optional<std::uint32_t> InducedSubgraph::local_id(Rank r) const noexcept {
  const auto it = std::lower_bound(members_.begin(), members_.end(), r);
  if (it == members_.end() || *it != r) return std::nullopt;
  return static_cast<std::uint32_t>(it - members_.begin());
}

std::vector<std::uint32_t> InducedSubgraph::distances_from(
    std::span<const std::uint32_t> sources) const {
  std::vector<std::uint32_t> dist(vertex_count(), kFar);
  std::vector<std::uint32_t> queue;
  for (auto s : sources) {
    if (dist[s] == kFar) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (auto w : neighbors(v)) {
      if (dist[w] == kFar) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

ComponentDecomposition analyze_components(const InducedSubgraph& g, int workers) {
  ComponentDecomposition c;
  const std::uint32_t count = g.vertex_count();
  c.component_of.assign(count, kFar);
  std::vector<std::vector<std::uint32_t>> members;
  for (std::uint32_t root = 0; root < count; ++root) {
    if (c.component_of[root] != kFar) continue;
    const std::uint32_t id = c.component_count++;
    members.emplace_back();
    auto& list = members.back();
    c.component_of[root] = id;
    list.push_back(root);
    for (std::size_t head = 0; head < list.size(); ++head) {
      for (auto w : g.neighbors(list[head])) {
        if (c.component_of[w] == kFar) {
          c.component_of[w] = id;
          list.push_back(w);
        }
      }
    }
  }

  c.diameters.assign(c.component_count, 0);
  detail::parallel_slices(workers, c.component_count,
                          [&](std::uint64_t b, std::uint64_t e, int) {
                            ComponentSearch search(g);
                            for (std::uint64_t id = b; id < e; ++id) {
                              c.diameters[id] = component_diameter(search, members[id]);
                            }
                          });

  for (const auto& list : members) c.sizes_descending.push_back(list.size());
  std::sort(c.sizes_descending.rbegin(), c.sizes_descending.rend());
  for (auto d : c.diameters) c.longest_segment = std::max(c.longest_segment, d);
  return c;
}

DnResult compute_dn(const InducedSubgraph& g, const ComponentDecomposition& c,
                    const DistanceField& from_identity, int threshold) {
  if (from_identity.source() != 0 || !from_identity.complete()) {
    throw PreconditionError("a complete distance field from the identity is required; "
                            "run bfs first");
  }
  DnResult result;
  for (auto d : c.diameters) result.d_n = std::max(result.d_n, d);

  std::vector<std::uint32_t> frontier;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (from_identity[g.rank_of(v)] == threshold) frontier.push_back(v);
  }
  const auto dist = g.distances_from(frontier);
  for (auto d : dist) {
    if (d == kFar) {
      ++result.unreachable_from_frontier;
    } else {
      result.d_n_refined = std::max(result.d_n_refined, d);
    }
  }
  return result;
}

}  // namespace pancake
