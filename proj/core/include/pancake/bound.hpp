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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pancake/bfs.hpp"
#include "pancake/distance_field.hpp"
#include "pancake/permutation.hpp"
#include "pancake/structure.hpp"

namespace pancake {

enum class MSetMethod { kExact, kChunked };

const char* to_string(MSetMethod method) noexcept;

/// Vertices of P_n far from the identity: {u : d(I, u) >= threshold}.
struct MSet {
  int n = 0;
  int threshold = 0;
  std::vector<Rank> members;  // sorted ascending, unique
  MSetMethod method = MSetMethod::kExact;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Rank r) const noexcept;
};

/// Members read directly off a distance field from the identity. Throws
/// PreconditionError when the field is not a complete search from I_n.
MSet build_mset_exact(const DistanceField& from_identity, int threshold);

struct ChunkOptions {
  int chunk_size = 5;
  /// Upper limit on walk vertices visited, checked before each level.
  std::uint64_t node_budget = 2'000'000'000;
  int max_degree = 9;
};

/// Number of non-backtracking generator words of the given length on P_n:
/// (n-1)(n-2)^(length-1).
std::uint64_t nonbacktracking_word_count(int n, int length);

/// The walk-pruning construction of M.
///
/// threshold = q * chunk + r. Starting from {I_n}, each of q levels walks
/// every non-backtracking word of length `chunk` from every current start c;
/// B_c collects the walk vertices other than the endpoint (the start
/// included), C_c the endpoints. The level keeps (S_n \ B_c) u C_c for each
/// c and intersects; the union of the C_c becomes the next level's starts.
/// A final level of length r runs when r > 0. Throws NodeBudgetExceeded
/// before any level that would exceed the budget.
MSet build_mset_chunked(int n, int threshold, const ChunkOptions& options = {});

/// Elementwise comparison of two member sets for the same (n, threshold).
struct MSetComparison {
  int n = 0;
  int threshold = 0;
  std::vector<Rank> missing;  // in exact, absent from chunked
  std::vector<Rank> extra;    // in chunked, absent from exact

  bool agree() const noexcept { return missing.empty() && extra.empty(); }
};

MSetComparison compare_msets(const MSet& exact, const MSet& chunked);

/// Subgraph of P_n induced on a member set, in compressed sparse row form.
/// Local vertex ids follow the sorted member order.
class InducedSubgraph {
 public:
  explicit InducedSubgraph(const MSet& m);

  std::uint32_t vertex_count() const noexcept {
    return static_cast<std::uint32_t>(members_.size());
  }
  std::uint64_t edge_count() const noexcept { return adjacency_.size() / 2; }
  Rank rank_of(std::uint32_t v) const noexcept { return members_[v]; }
  std::optional<std::uint32_t> local_id(Rank r) const noexcept;

  std::span<const std::uint32_t> neighbors(std::uint32_t v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  /// Unit-weight shortest-path distances from `sources`; UINT32_MAX when
  /// unreachable.
  std::vector<std::uint32_t> distances_from(
      std::span<const std::uint32_t> sources) const;

 private:
  std::vector<Rank> members_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> adjacency_;
};

struct ComponentDecomposition {
  std::vector<std::uint32_t> component_of;  // per local vertex id
  /// Sizes in descending order; component ids are assigned in order of
  /// their smallest member, not by size.
  std::vector<std::uint64_t> sizes_descending;
  std::uint32_t component_count = 0;
  /// Length of the longest induced shortest path inside one component.
  std::uint32_t longest_segment = 0;
  /// Diameter of each component (by component id).
  std::vector<std::uint32_t> diameters;
};

/// Connected components of the induced subgraph and the diameter of each.
/// Diameters come from the eccentricity-bounding scheme of Takes and
/// Kosters, which is exact and usually needs far fewer searches than one
/// per vertex.
ComponentDecomposition analyze_components(const InducedSubgraph& g, int workers = 1);

struct DnResult {
  /// Maximum induced distance between two members of the same component.
  std::uint32_t d_n = 0;
  /// Maximum over members of the induced distance from the nearest
  /// member at exactly the threshold distance.
  std::uint32_t d_n_refined = 0;
  /// Members with no induced path from a threshold-distance member. They
  /// do not contribute to d_n_refined. Always zero for an exact M.
  std::uint64_t unreachable_from_frontier = 0;
};

DnResult compute_dn(const InducedSubgraph& g, const ComponentDecomposition& c,
                    const DistanceField& from_identity, int threshold);

struct BoundOptions {
  MSetMethod method = MSetMethod::kExact;
  ChunkOptions chunk;
  BfsOptions bfs;
  /// Overrides diam(P_{n-1}) as the threshold.
  std::optional<int> threshold_override;
};

struct BoundReport {
  int n = 0;
  int threshold = 0;
  std::string threshold_source;  // "bfs", "table1" or "override"
  std::uint64_t mset_size = 0;
  MSetMethod mset_method = MSetMethod::kExact;
  std::vector<std::uint64_t> component_sizes;  // descending
  std::uint64_t induced_edges = 0;
  std::uint32_t longest_segment_T = 0;
  std::uint32_t d_n = 0;
  std::uint32_t d_n_refined = 0;
  std::uint64_t unreachable_from_frontier = 0;
  int bound = 0;
  int bound_refined = 0;
  std::optional<int> exact_diameter;
  std::optional<bool> sound;
  /// threshold <= exact diameter (monotonicity in n), when exact is known.
  std::optional<bool> monotone;
  std::vector<ClassicalBound> classical_bounds;
  /// Present when the chunked construction ran; compared against exact.
  std::optional<MSetComparison> mset_comparison;
  /// Spanning structures inside M are BFS trees; with unit edge weights
  /// Dijkstra reduces to BFS.
  std::string tree_family = "bfs-shortest-path-trees (unit weights)";
};

/// The full pipeline: threshold, M, induced components, d_n and the bound
/// threshold + d_n. Requires 4 <= n <= 12 under the default budget.
BoundReport certify_bound(int n, const BoundOptions& options = {});

}  // namespace pancake
