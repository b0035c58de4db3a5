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

#include "pancake/structure.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "pancake/error.hpp"

namespace pancake {
namespace {

// Drops the last entry k and closes the gap in the values above it.
Permutation project_to_copy(const Permutation& p) {
  const int n = p.degree();
  const int k = p[n - 1];
  std::vector<int> entries;
  entries.reserve(n - 1);
  for (int j = 0; j + 1 < n; ++j) entries.push_back(p[j] > k ? p[j] - 1 : p[j]);
  return Permutation::from_entries(entries);
}

}  // namespace

VertexTransitivityReport verify_prop3(int n, std::uint64_t translation_samples,
                                      std::uint64_t seed, int max_degree) {
  if (n < 2 || n > max_degree) {
    throw PreconditionError("all-pairs eccentricity check supports 2 <= n <= " +
                            std::to_string(max_degree));
  }
  const Rank total = factorial(n);
  VertexTransitivityReport report;
  report.n = n;
  report.eccentricities.resize(total);

  std::vector<DistanceField> fields;
  fields.reserve(total);
  for (Rank r = 0; r < total; ++r) {
    fields.push_back(bfs(unrank(r, n)));
    report.eccentricities[r] = fields.back().eccentricity();
  }
  report.identity_eccentricity = report.eccentricities[0];
  report.all_equal = true;
  for (Rank r = 0; r < total; ++r) {
    if (report.eccentricities[r] != report.identity_eccentricity) {
      report.all_equal = false;
      report.counterexample = r;
      break;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Rank> pick(0, total - 1);
  for (std::uint64_t s = 0; s < translation_samples; ++s) {
    const Rank ru = pick(rng);
    const Rank rv = pick(rng);
    const Permutation u = unrank(ru, n);
    const Permutation v = unrank(rv, n);
    const Rank w = rank(compose(inverse(u), v));
    ++report.translation_checks;
    if (fields[ru][rv] != fields[0][w]) ++report.translation_failures;
  }
  return report;
}

TranslationReport verify_translation_invariance(int n, std::uint64_t samples,
                                                std::uint64_t seed) {
  const Rank total = factorial(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Rank> pick(0, total - 1);
  std::vector<std::pair<Rank, Rank>> pairs(samples);
  for (auto& [u, v] : pairs) {
    u = pick(rng);
    v = pick(rng);
  }
  std::sort(pairs.begin(), pairs.end());

  const DistanceField from_identity = bfs(Permutation::identity(n));
  TranslationReport report;
  report.n = n;
  std::optional<DistanceField> from_u;
  for (const auto& [ru, rv] : pairs) {
    if (!from_u || from_u->source() != ru) from_u = bfs(unrank(ru, n));
    const Permutation u = unrank(ru, n);
    const Permutation v = unrank(rv, n);
    const int direct = (*from_u)[rv];
    const int translated = from_identity.at(compose(inverse(u), v));
    ++report.checked;
    if (direct != translated) report.failures.push_back({u, v, direct, translated});
  }
  return report;
}

HierarchyReport verify_hierarchy(int n) {
  if (n < 3 || n > 8) {
    throw PreconditionError("hierarchy check supports 3 <= n <= 8");
  }
  const Rank total = factorial(n);
  const Rank copy_size = factorial(n - 1);
  HierarchyReport report;
  report.n = n;
  report.class_sizes.assign(n, 0);
  report.closed = true;
  report.isomorphic = true;
  report.crossing_ok = true;

  // seen[k-1][rank of projection] marks the image of class k.
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(copy_size, false));
  for (Rank r = 0; r < total; ++r) {
    const Permutation p = unrank(r, n);
    const int k = p[n - 1];
    ++report.class_sizes[k - 1];
    const Permutation image = project_to_copy(p);
    const Rank image_rank = rank(image);
    if (seen[k - 1][image_rank]) {
      report.isomorphic = false;
      if (report.failure.empty()) {
        report.failure = "projection not injective at " + p.to_string();
      }
    }
    seen[k - 1][image_rank] = true;

    for (int i = 2; i < n; ++i) {
      const Permutation q = apply_reversal(p, i);
      if (q[n - 1] != k) {
        report.closed = false;
        if (report.failure.empty()) {
          report.failure = "r_" + std::to_string(i) + " leaves the class of " + p.to_string();
        }
      } else if (project_to_copy(q) != apply_reversal(image, i)) {
        report.isomorphic = false;
        if (report.failure.empty()) {
          report.failure = "edge r_" + std::to_string(i) + " at " + p.to_string() +
                           " not preserved by projection";
        }
      }
    }
    if (apply_reversal(p, n)[n - 1] == k) {
      report.crossing_ok = false;
      if (report.failure.empty()) report.failure = "r_n stays in class at " + p.to_string();
    }
  }
  report.sizes_ok = std::all_of(report.class_sizes.begin(), report.class_sizes.end(),
                                [&](std::uint64_t s) { return s == copy_size; });
  return report;
}

std::vector<ClassicalBound> check_classical_bounds(int n, int d) {
  std::vector<ClassicalBound> out;
  const double dn = n;
  const double dd = d;

  ClassicalBound gp;
  gp.name = "upper_5n+5_over_3";
  gp.relation = "d <= (5n+5)/3";
  gp.applies = true;
  gp.holds = 3 * d <= 5 * n + 5;
  gp.slack = (5 * dn + 5) / 3 - dd;
  out.push_back(gp);

  ClassicalBound chitturi;
  chitturi.name = "upper_18n_over_11";
  chitturi.relation = "d <= 18n/11";
  chitturi.applies = true;
  chitturi.holds = 11 * d <= 18 * n;
  chitturi.slack = 18 * dn / 11 - dd;
  out.push_back(chitturi);

  ClassicalBound lower16;
  lower16.name = "lower_17n_over_16";
  lower16.relation = "17n/16 <= d (16 | n)";
  lower16.applies = n % 16 == 0;
  lower16.holds = lower16.applies && 17 * n <= 16 * d;
  lower16.slack = lower16.applies ? dd - 17 * dn / 16 : 0.0;
  out.push_back(lower16);

  ClassicalBound lower14;
  lower14.name = "lower_15n_over_14";
  lower14.relation = "15n/14 <= d (14 | n)";
  lower14.applies = n % 14 == 0;
  lower14.holds = lower14.applies && 15 * n <= 14 * d;
  lower14.slack = lower14.applies ? dd - 15 * dn / 14 : 0.0;
  out.push_back(lower14);

  return out;
}

}  // namespace pancake
