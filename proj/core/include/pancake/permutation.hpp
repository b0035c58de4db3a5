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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pancake {

inline constexpr int kMaxDegree = 20;

/// Index of a permutation in lexicographic order of its one-line notation.
using Rank = std::uint64_t;

/// n! for 0 <= n <= 20. Throws PreconditionError outside that range.
std::uint64_t factorial(int n);

/// A permutation of {1..n} in one-line notation, 2 <= n <= 20.
///
/// Values are immutable: every operation returns a new Permutation. Entries
/// are stored inline, so copies are cheap and never allocate.
class Permutation {
 public:
  /// Validates that `entries` is a bijection on {1..n}; throws ParseError
  /// naming the duplicated or missing value otherwise.
  static Permutation from_entries(std::span<const int> entries);
  static Permutation from_entries(std::initializer_list<int> entries);

  /// Parses space-separated one-line notation such as "3 1 2".
  static Permutation parse(std::string_view text);

  static Permutation identity(int n);

  /// The generator r_i as a permutation: positions 1..i reversed.
  static Permutation reversal(int n, int i);

  int degree() const noexcept { return degree_; }

  /// Value at zero-based position `pos`; values are in 1..n.
  int operator[](int pos) const noexcept { return entries_[pos]; }

  std::span<const std::uint8_t> entries() const noexcept {
    return {entries_.data(), static_cast<std::size_t>(degree_)};
  }

  bool is_identity() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;

  // Unused slots stay zero so defaulted comparison is value comparison.
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> entries_{};

  friend Permutation apply_reversal(const Permutation&, int);
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation unrank(Rank, int);
};

/// p with its first i entries reversed (p * r_i). Throws InvalidGenerator
/// unless 2 <= i <= n.
Permutation apply_reversal(const Permutation& p, int i);

/// c(j) = a(b(j)). With this convention apply_reversal(p, i) equals
/// compose(p, Permutation::reversal(n, i)).
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

/// Lexicographic rank in [0, n!).
Rank rank(const Permutation& p) noexcept;

/// Inverse of rank. Throws RankOutOfRange when r >= n!.
Permutation unrank(Rank r, int n);

/// Every permutation of degree n in lexicographic order. Intended for small
/// n (exhaustive tests and sweeps).
std::vector<Permutation> all_permutations(int n);

}  // namespace pancake
