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
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pancake/distance_field.hpp"
#include "pancake/permutation.hpp"

namespace pancake {

/// A Hamiltonian path (or cycle, when `cyclic`) of P_n as a sequence of
/// LexRanks.
struct HamOrder {
  int n = 0;
  std::vector<Rank> order;
  bool cyclic = false;
};

struct HamValidation {
  bool valid = false;
  /// Index k such that the pair (k, k+1) (or, for the closing edge, the
  /// pair (n!-1, 0)) is the first violation; the offending entry for
  /// out-of-range or duplicate ranks.
  std::optional<std::size_t> first_bad_index;
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

/// Hamiltonian cycle of P_n for 3 <= n <= 8.
///
/// Built from the hierarchy: if W is the generator word of a Hamiltonian
/// cycle of P_{n-1} that closes with r_{n-1}, then (W' r_n)^n with W' = W
/// minus its closing letter is a Hamiltonian cycle of P_n closing with r_n.
/// Each W' sweeps one copy of P_{n-1}, and r_{n-1} r_n rotates the one-line
/// notation right by one, so the n sweeps visit the copies with last entry
/// pi_n, pi_{n-1}, ..., pi_1. The base case is (r_2 r_3)^3 on P_3.
///
/// The result is checked with validate_ham before it is returned; a failure
/// throws std::logic_error naming the first bad index.
HamOrder build_ham(int n, bool want_cycle);

HamValidation validate_ham(const HamOrder& h);

/// True when q = apply_reversal(p, i) for some 2 <= i <= n.
bool adjacent(const Permutation& p, const Permutation& q) noexcept;

/// Left translate g * H of a Hamiltonian order. Left translation is an
/// automorphism of P_n, so every translate is again a Hamiltonian order.
class TranslateTree {
 public:
  TranslateTree(Permutation g, const HamOrder& base);

  const Permutation& translation() const noexcept { return g_; }
  Permutation vertex(std::size_t k) const;
  HamOrder materialize() const;

 private:
  Permutation g_;
  std::reference_wrapper<const HamOrder> base_;
};

/// Per group element w, the smallest index gap |m - k| over ordered pairs
/// k != m of `order` with order[k]^-1 * order[m] = w. The minimum over all
/// left translates g*H of the tree distance between u and v equals the
/// entry for w = u^-1 v.
struct QuotientGapTable {
  static constexpr std::uint32_t kUnset = UINT32_MAX;

  int n = 0;
  std::vector<std::uint32_t> min_gap;  // indexed by rank(w); 0 at identity
  /// Realizing pair (from, to). Ties on the gap go to the smallest `from`.
  std::vector<std::uint32_t> witness_from;
  std::vector<std::uint32_t> witness_to;
};

/// Builds the table for a Hamiltonian order of P_n, n <= 7 by default.
/// Pairs are scanned by increasing gap and the scan stops once every entry
/// is set. Each gap's pairs are split across `workers` threads; per-element
/// minima are merged in `from` order, so the result is deterministic.
QuotientGapTable translate_position_index(const HamOrder& h, int workers = 1,
                                          int max_degree = 7);

/// Outcome of comparing minimal translate-tree distance against graph
/// distance for every group element.
struct PathCoveringReport {
  int n = 0;
  std::uint64_t elements = 0;
  bool equality = false;
  std::uint64_t counterexamples = 0;       // minseg(w) > d(I, w)
  std::uint64_t lower_bound_violations = 0;  // minseg(w) < d(I, w)
  std::uint32_t max_gap = 0;  // max over w of minseg(w) - d(I, w)
  std::map<std::int64_t, std::uint64_t> gap_histogram;
  /// Ranks of the counterexample elements, ascending.
  std::vector<Rank> counterexample_ranks;
};

/// Compares the table against distances from the identity. Asserts nothing
/// about the outcome; callers read `equality` and the histogram.
PathCoveringReport verify_prop2(const QuotientGapTable& table,
                                const DistanceField& from_identity);

/// Text form: "# PNKH n=<n> cyclic=<0|1>" then one rank per line.
void write_ham(std::ostream& out, const HamOrder& h);
HamOrder read_ham(std::istream& in);

}  // namespace pancake
