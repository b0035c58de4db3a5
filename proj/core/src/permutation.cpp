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

#include "pancake/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <string>

#include "pancake/error.hpp"

namespace pancake {
namespace {

constexpr std::array<std::uint64_t, kMaxDegree + 1> kFactorials = [] {
  std::array<std::uint64_t, kMaxDegree + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kMaxDegree; ++i) f[i] = f[i - 1] * i;
  return f;
}();

void check_degree(int n) {
  if (n < 2 || n > kMaxDegree) {
    throw PreconditionError("degree " + std::to_string(n) +
                            " outside supported range [2, 20]");
  }
}

// Index of the k-th (zero-based) set bit of `mask`.
int select_bit(std::uint32_t mask, std::uint64_t k) {
  for (; k > 0; --k) mask &= mask - 1;
  return std::countr_zero(mask);
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxDegree) {
    throw PreconditionError("factorial argument " + std::to_string(n) +
                            " outside [0, 20]");
  }
  return kFactorials[n];
}

Permutation Permutation::from_entries(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  if (n < 2 || n > kMaxDegree) {
    throw ParseError("permutation has " + std::to_string(n) +
                     " entries; degree must be in [2, 20]");
  }
  std::array<int, kMaxDegree + 1> seen{};
  for (int v : entries) {
    if (v < 1 || v > n) {
      throw ParseError("value " + std::to_string(v) + " outside 1.." +
                       std::to_string(n));
    }
    if (seen[v]++ > 0) {
      throw ParseError("value " + std::to_string(v) + " is duplicated");
    }
  }
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(n);
  for (int j = 0; j < n; ++j) p.entries_[j] = static_cast<std::uint8_t>(entries[j]);
  return p;
}

Permutation Permutation::from_entries(std::initializer_list<int> entries) {
  return from_entries(std::span<const int>(entries.begin(), entries.size()));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == ',' || text[pos] == '\n')) {
      ++pos;
    }
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' &&
           text[end] != ',' && text[end] != '\n') {
      ++end;
    }
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("invalid token '" + std::string(token) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  const int n = static_cast<int>(values.size());
  if (n >= 2 && n <= kMaxDegree) {
    // Name a missing value when the only problem is a duplicate, so the
    // diagnostic covers both halves of the bijection.
    std::vector<int> counts(n + 1, 0);
    for (int v : values) {
      if (v >= 1 && v <= n) ++counts[v];
    }
    for (int v : values) {
      if (v >= 1 && v <= n && counts[v] > 1) {
        const auto missing = std::find(counts.begin() + 1, counts.end(), 0);
        throw ParseError("value " + std::to_string(v) + " is duplicated; value " +
                         std::to_string(missing - counts.begin()) + " is missing");
      }
    }
  }
  return from_entries(values);
}

Permutation Permutation::identity(int n) {
  check_degree(n);
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(n);
  std::iota(p.entries_.begin(), p.entries_.begin() + n, std::uint8_t{1});
  return p;
}

Permutation Permutation::reversal(int n, int i) {
  return apply_reversal(identity(n), i);
}

bool Permutation::is_identity() const noexcept {
  for (int j = 0; j < degree_; ++j) {
    if (entries_[j] != j + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int j = 0; j < degree_; ++j) {
    if (j > 0) s += ' ';
    s += std::to_string(entries_[j]);
  }
  return s;
}

Permutation apply_reversal(const Permutation& p, int i) {
  if (i < 2 || i > p.degree_) {
    throw InvalidGenerator("reversal index " + std::to_string(i) +
                           " outside [2, " + std::to_string(p.degree_) + "]");
  }
  Permutation q = p;
  std::reverse(q.entries_.begin(), q.entries_.begin() + i);
  return q;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree_ != b.degree_) {
    throw DegreeMismatch("cannot compose degree " + std::to_string(a.degree_) +
                         " with degree " + std::to_string(b.degree_));
  }
  Permutation c = a;
  for (int j = 0; j < a.degree_; ++j) c.entries_[j] = a.entries_[b.entries_[j] - 1];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q = p;
  for (int j = 0; j < p.degree_; ++j) {
    q.entries_[p.entries_[j] - 1] = static_cast<std::uint8_t>(j + 1);
  }
  return q;
}

Rank rank(const Permutation& p) noexcept {
  const int n = p.degree();
  std::uint32_t remaining = (std::uint32_t{1} << n) - 1;
  Rank r = 0;
  for (int j = 0; j < n; ++j) {
    const int v = p[j] - 1;
    const auto digit = std::popcount(remaining & ((std::uint32_t{1} << v) - 1));
    r = r * static_cast<Rank>(n - j) + static_cast<Rank>(digit);
    remaining &= ~(std::uint32_t{1} << v);
  }
  return r;
}

Permutation unrank(Rank r, int n) {
  check_degree(n);
  if (r >= kFactorials[n]) {
    throw RankOutOfRange("rank " + std::to_string(r) + " outside [0, " +
                         std::to_string(kFactorials[n]) + ")");
  }
  std::array<std::uint8_t, kMaxDegree> digits{};
  for (int j = n - 1; j >= 0; --j) {
    const auto base = static_cast<Rank>(n - j);
    digits[j] = static_cast<std::uint8_t>(r % base);
    r /= base;
  }
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(n);
  std::uint32_t remaining = (std::uint32_t{1} << n) - 1;
  for (int j = 0; j < n; ++j) {
    const int v = select_bit(remaining, digits[j]);
    p.entries_[j] = static_cast<std::uint8_t>(v + 1);
    remaining &= ~(std::uint32_t{1} << v);
  }
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n);
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation::from_entries(entries));
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

}  // namespace pancake
