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

#include "pancake/bfs.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <string>

#include "pancake/error.hpp"
#include "parallel.hpp"

namespace pancake {
namespace {

constexpr int kMaxSearchDegree = 13;

template <int N>
constexpr std::array<Rank, N + 1> kFact = [] {
  std::array<Rank, N + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= N; ++i) f[i] = f[i - 1] * i;
  return f;
}();

// Rank arithmetic specialised on the degree so that the mixed-radix
// divisions and the reversal loops are resolved at compile time.
//
// Values are zero-based inside the kernel. The Lehmer digit at position j
// counts the smaller values to its right; reversing the first i positions
// leaves digits j >= i untouched, so each neighbour rank is the parent's
// suffix contribution plus a recomputed prefix of length i.
template <int N>
struct Kernel {
  static constexpr std::uint32_t kFull = (std::uint32_t{1} << N) - 1;

  static void decode(Rank r, std::array<std::uint8_t, N>& e) {
    std::array<std::uint8_t, N> digits{};
    for (int j = N - 1; j >= 0; --j) {
      digits[j] = static_cast<std::uint8_t>(r % (N - j));
      r /= (N - j);
    }
    std::uint32_t remaining = kFull;
    for (int j = 0; j < N; ++j) {
      std::uint32_t mask = remaining;
      for (int k = digits[j]; k > 0; --k) mask &= mask - 1;
      const int v = std::countr_zero(mask);
      e[j] = static_cast<std::uint8_t>(v);
      remaining &= ~(std::uint32_t{1} << v);
    }
  }

  template <class Visit>
  static void for_each_neighbor(const std::array<std::uint8_t, N>& e, Visit&& visit) {
    std::array<Rank, N + 1> suffix{};
    std::array<std::uint8_t, N> digits{};
    std::uint32_t remaining = kFull;
    for (int j = 0; j < N; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << e[j];
      digits[j] = static_cast<std::uint8_t>(std::popcount(remaining & (bit - 1)));
      remaining &= ~bit;
    }
    for (int j = N - 1; j >= 0; --j) {
      suffix[j] = suffix[j + 1] + digits[j] * kFact<N>[N - 1 - j];
    }
    for (int i = 2; i <= N; ++i) {
      Rank r = suffix[i];
      remaining = kFull;
      for (int j = 0; j < i; ++j) {
        const std::uint32_t bit = std::uint32_t{1} << e[i - 1 - j];
        r += static_cast<Rank>(std::popcount(remaining & (bit - 1))) * kFact<N>[N - 1 - j];
        remaining &= ~bit;
      }
      visit(r);
    }
  }
};

using Word = std::uint64_t;

template <int N, bool kShared>
void expand_slice(const std::vector<Word>& current, std::vector<Word>& next,
                  const std::vector<std::uint8_t>& dist, std::uint64_t word_begin,
                  std::uint64_t word_end) {
  std::array<std::uint8_t, N> e{};
  for (std::uint64_t w = word_begin; w < word_end; ++w) {
    Word bits = current[w];
    while (bits != 0) {
      const Rank r = w * 64 + static_cast<Rank>(std::countr_zero(bits));
      bits &= bits - 1;
      Kernel<N>::decode(r, e);
      Kernel<N>::for_each_neighbor(e, [&](Rank nb) {
        if (dist[nb] != DistanceField::kUnvisited) return;
        const Word bit = Word{1} << (nb & 63);
        if constexpr (kShared) {
          std::atomic_ref<Word> slot(next[nb >> 6]);
          if ((slot.load(std::memory_order_relaxed) & bit) == 0) {
            slot.fetch_or(bit, std::memory_order_relaxed);
          }
        } else {
          next[nb >> 6] |= bit;
        }
      });
    }
  }
}

template <int N>
std::vector<std::uint8_t> search(Rank source, int workers) {
  const Rank total = kFact<N>[N];
  const std::uint64_t words = (total + 63) / 64;
  std::vector<std::uint8_t> dist(total, DistanceField::kUnvisited);
  std::vector<Word> current(words, 0);
  std::vector<Word> next(words, 0);

  dist[source] = 0;
  current[source >> 6] |= Word{1} << (source & 63);

  for (int level = 0;; ++level) {
    detail::parallel_slices(workers, words, [&](std::uint64_t b, std::uint64_t e, int) {
      if (workers > 1) {
        expand_slice<N, true>(current, next, dist, b, e);
      } else {
        expand_slice<N, false>(current, next, dist, b, e);
      }
    });

    // Commit pass: only the owner of a word writes the distances in it.
    std::vector<std::uint64_t> found(std::max(1, workers), 0);
    const auto value = static_cast<std::uint8_t>(level + 1);
    detail::parallel_slices(workers, words, [&](std::uint64_t b, std::uint64_t e, int t) {
      std::uint64_t count = 0;
      for (std::uint64_t w = b; w < e; ++w) {
        Word bits = next[w];
        Word keep = 0;
        while (bits != 0) {
          const int bit = std::countr_zero(bits);
          bits &= bits - 1;
          const Rank r = w * 64 + static_cast<Rank>(bit);
          if (dist[r] == DistanceField::kUnvisited) {
            dist[r] = value;
            keep |= Word{1} << bit;
            ++count;
          }
        }
        next[w] = keep;
      }
      found[t] = count;
    });

    std::uint64_t discovered = 0;
    for (auto c : found) discovered += c;
    if (discovered == 0) break;
    if (value == DistanceField::kUnvisited - 1) {
      throw Error("distance exceeds the one-byte field");
    }
    current.swap(next);
    std::fill(next.begin(), next.end(), 0);
  }
  return dist;
}

template <int N>
std::vector<std::uint8_t> dispatch(int n, Rank source, int workers) {
  if constexpr (N > kMaxSearchDegree) {
    throw PreconditionError("no search beyond degree " + std::to_string(kMaxSearchDegree));
  } else {
    if (n == N) return search<N>(source, workers);
    return dispatch<N + 1>(n, source, workers);
  }
}

}  // namespace

std::uint64_t bfs_required_bytes(int n) {
  const std::uint64_t total = factorial(n);
  const std::uint64_t bitset_bytes = (total + 63) / 64 * 8;
  return total + 2 * bitset_bytes;
}

void check_bfs_budget(int n, const BfsOptions& options) {
  if (n < 2 || n > kMaxDegree) {
    throw PreconditionError("degree " + std::to_string(n) + " outside [2, 20]");
  }
  const std::uint64_t required = bfs_required_bytes(n);
  if (n > kDefaultMaxBfsDegree + 1 ||
      (n == kDefaultMaxBfsDegree + 1 && !options.allow_large)) {
    throw BudgetExceeded(required, options.memory_budget,
                         "search of P_" + std::to_string(n) + " needs " +
                             std::to_string(required) + " bytes; n=13 requires "
                             "the large-run override and n>13 is refused");
  }
  if (required > options.memory_budget) {
    throw BudgetExceeded(required, options.memory_budget,
                         "search of P_" + std::to_string(n) + " needs " +
                             std::to_string(required) + " bytes, budget is " +
                             std::to_string(options.memory_budget));
  }
}

std::vector<Permutation> neighbors(const Permutation& p) {
  std::vector<Permutation> out;
  out.reserve(p.degree() - 1);
  for (int i = 2; i <= p.degree(); ++i) out.push_back(apply_reversal(p, i));
  return out;
}

DistanceField bfs(const Permutation& source, const BfsOptions& options) {
  const int n = source.degree();
  check_bfs_budget(n, options);
  if (options.workers < 1) {
    throw PreconditionError("worker count must be at least 1");
  }
  const Rank s = rank(source);
  return DistanceField(n, s, dispatch<2>(n, s, options.workers));
}

int eccentricity_of_identity(int n, const BfsOptions& options) {
  return bfs(Permutation::identity(n), options).eccentricity();
}

}  // namespace pancake
