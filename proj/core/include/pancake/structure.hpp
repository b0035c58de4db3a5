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
#include <string>
#include <vector>

#include "pancake/bfs.hpp"
#include "pancake/permutation.hpp"

namespace pancake {

// Executable checks of the structural facts the bound method relies on.

/// All-pairs eccentricities plus sampled translation-invariance checks.
struct VertexTransitivityReport {
  int n = 0;
  std::vector<int> eccentricities;  // indexed by LexRank of the source
  int identity_eccentricity = 0;
  bool all_equal = false;
  /// First source whose eccentricity differs from the identity's.
  std::optional<Rank> counterexample;

  std::uint64_t translation_checks = 0;
  std::uint64_t translation_failures = 0;

  bool ok() const noexcept {
    return all_equal && translation_failures == 0;
  }
};

/// Computes the eccentricity of every vertex of P_n (n <= 6 by default) and
/// spot-checks d(u, v) = d(I, u^-1 v) on `translation_samples` random pairs.
VertexTransitivityReport verify_prop3(int n, std::uint64_t translation_samples,
                                      std::uint64_t seed, int max_degree = 6);

struct TranslationCheck {
  Permutation u;
  Permutation v;
  int direct = 0;      // BFS from u, read at v
  int translated = 0;  // BFS from I, read at u^-1 v
};

struct TranslationReport {
  int n = 0;
  std::uint64_t checked = 0;
  std::vector<TranslationCheck> failures;
};

/// d(u, v) against d(I, u^-1 v) for `samples` random pairs. Each distinct
/// u costs one BFS, so this is meant for n <= 8.
TranslationReport verify_translation_invariance(int n, std::uint64_t samples,
                                                std::uint64_t seed);

/// Partition of P_n by last entry into n copies of P_{n-1}.
struct HierarchyReport {
  int n = 0;
  std::vector<std::uint64_t> class_sizes;  // index k-1 holds |{p : p_n = k}|
  bool sizes_ok = false;
  bool closed = false;      // r_2..r_{n-1} never leave a class
  bool isomorphic = false;  // dropping p_n and relabelling is an isomorphism
  bool crossing_ok = false; // r_n always changes class
  std::string failure;

  bool ok() const noexcept {
    return sizes_ok && closed && isomorphic && crossing_ok;
  }
};

HierarchyReport verify_hierarchy(int n);

/// One of the classical diameter inequalities evaluated at (n, d).
struct ClassicalBound {
  std::string name;      // "upper_5n+5_over_3", ...
  std::string relation;  // human-readable inequality
  bool applies = false;
  bool holds = false;
  /// Distance from d to the bound (positive when the inequality holds).
  double slack = 0.0;
};

/// Evaluates d <= (5n+5)/3 and d <= 18n/11 for every n, 17n/16 <= d when
/// 16 | n and 15n/14 <= d when 14 | n. Verdicts use exact integer
/// arithmetic.
std::vector<ClassicalBound> check_classical_bounds(int n, int d);

}  // namespace pancake
