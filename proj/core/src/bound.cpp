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
#include <string>

#include "pancake/bound.hpp"
#include "pancake/error.hpp"
#include "pancake/table1.hpp"

namespace pancake {

BoundReport certify_bound(int n, const BoundOptions& options) {
  if (n < 4) {
    throw PreconditionError("the bound method needs diam(P_{n-1}) with n-1 >= 3; "
                            "n >= 4 required");
  }
  BoundReport report;
  report.n = n;

  if (options.threshold_override) {
    report.threshold = *options.threshold_override;
    report.threshold_source = "override";
  } else {
    try {
      check_bfs_budget(n - 1, options.bfs);
      report.threshold = eccentricity_of_identity(n - 1, options.bfs);
      report.threshold_source = "bfs";
    } catch (const BudgetExceeded&) {
      const auto tabulated = table1_diameter(n - 1);
      if (!tabulated) throw;
      report.threshold = *tabulated;
      report.threshold_source = "table1";
    }
  }
  if (report.threshold < 0) throw PreconditionError("threshold must be non-negative");

  const DistanceField field = bfs(Permutation::identity(n), options.bfs);
  const int exact = field.eccentricity();
  report.exact_diameter = exact;

  MSet m = build_mset_exact(field, report.threshold);
  if (options.method == MSetMethod::kChunked) {
    MSet chunked = build_mset_chunked(n, report.threshold, options.chunk);
    report.mset_comparison = compare_msets(m, chunked);
    m = std::move(chunked);
  }
  report.mset_method = m.method;
  report.mset_size = m.size();

  const InducedSubgraph g(m);
  const ComponentDecomposition components = analyze_components(g, options.bfs.workers);
  const DnResult dn = compute_dn(g, components, field, report.threshold);

  report.component_sizes = components.sizes_descending;
  report.induced_edges = g.edge_count();
  report.longest_segment_T = components.longest_segment;
  report.d_n = dn.d_n;
  report.d_n_refined = dn.d_n_refined;
  report.unreachable_from_frontier = dn.unreachable_from_frontier;
  report.bound = report.threshold + static_cast<int>(dn.d_n);
  report.bound_refined = report.threshold + static_cast<int>(dn.d_n_refined);
  report.sound = exact <= report.bound_refined && report.bound_refined <= report.bound;
  report.monotone = report.threshold <= exact;
  report.classical_bounds = check_classical_bounds(n, exact);
  return report;
}

}  // namespace pancake
