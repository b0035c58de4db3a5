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

#include <string>

#include "pancake/error.hpp"
#include "pancake/ham.hpp"
#include "parallel.hpp"

namespace pancake {

QuotientGapTable translate_position_index(const HamOrder& h, int workers,
                                          int max_degree) {
  if (h.n < 2 || h.n > max_degree) {
    throw PreconditionError("quotient-gap table supports n <= " +
                            std::to_string(max_degree));
  }
  const Rank total = factorial(h.n);
  if (h.order.size() != total) {
    throw PreconditionError("order does not cover all n! vertices");
  }
  const std::size_t len = h.order.size();
  std::vector<Permutation> vertex;
  std::vector<Permutation> vertex_inv;
  vertex.reserve(len);
  vertex_inv.reserve(len);
  for (Rank r : h.order) {
    vertex.push_back(unrank(r, h.n));
    vertex_inv.push_back(inverse(vertex.back()));
  }

  QuotientGapTable table;
  table.n = h.n;
  table.min_gap.assign(total, QuotientGapTable::kUnset);
  table.witness_from.assign(total, 0);
  table.witness_to.assign(total, 0);
  table.min_gap[0] = 0;
  std::uint64_t unset = total - 1;

  // quotient[2*from] pairs `from` with from+gap, quotient[2*from+1] with
  // from-gap; kNone marks a side that falls off the order.
  constexpr Rank kNone = ~Rank{0};
  std::vector<Rank> quotient(2 * len);
  for (std::size_t gap = 1; gap < len && unset > 0; ++gap) {
    detail::parallel_slices(workers, len, [&](std::uint64_t b, std::uint64_t e, int) {
      for (std::uint64_t from = b; from < e; ++from) {
        quotient[2 * from] =
            from + gap < len ? rank(compose(vertex_inv[from], vertex[from + gap])) : kNone;
        quotient[2 * from + 1] =
            from >= gap ? rank(compose(vertex_inv[from], vertex[from - gap])) : kNone;
      }
    });
    for (std::size_t from = 0; from < len; ++from) {
      for (int side = 0; side < 2; ++side) {
        const Rank w = quotient[2 * from + side];
        if (w == kNone || table.min_gap[w] != QuotientGapTable::kUnset) continue;
        table.min_gap[w] = static_cast<std::uint32_t>(gap);
        table.witness_from[w] = static_cast<std::uint32_t>(from);
        table.witness_to[w] =
            static_cast<std::uint32_t>(side == 0 ? from + gap : from - gap);
        --unset;
      }
    }
  }
  return table;
}

PathCoveringReport verify_prop2(const QuotientGapTable& table,
                                const DistanceField& from_identity) {
  if (from_identity.degree() != table.n || from_identity.source() != 0 ||
      !from_identity.complete()) {
    throw PreconditionError("a complete distance field from the identity of degree " +
                            std::to_string(table.n) + " is required; run bfs first");
  }
  PathCoveringReport report;
  report.n = table.n;
  report.elements = table.min_gap.size();
  for (Rank w = 0; w < table.min_gap.size(); ++w) {
    if (table.min_gap[w] == QuotientGapTable::kUnset) {
      throw PreconditionError("quotient-gap table has no entry for rank " +
                              std::to_string(w));
    }
    const std::int64_t diff =
        static_cast<std::int64_t>(table.min_gap[w]) - from_identity[w];
    ++report.gap_histogram[diff];
    if (diff < 0) {
      ++report.lower_bound_violations;
    } else if (diff > 0) {
      ++report.counterexamples;
      report.counterexample_ranks.push_back(w);
      report.max_gap = std::max(report.max_gap, static_cast<std::uint32_t>(diff));
    }
  }
  report.equality = report.counterexamples == 0 && report.lower_bound_violations == 0;
  return report;
}

}  // namespace pancake
