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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pancake/permutation.hpp"

namespace pancake {

/// Histogram of a distance field: counts[d] vertices at distance d.
struct LayerProfile {
  int n = 0;
  std::vector<std::uint64_t> counts;

  int eccentricity() const noexcept {
    return static_cast<int>(counts.size()) - 1;
  }
  std::uint64_t total() const noexcept;

  /// "distance,count" header followed by one row per layer.
  std::string to_csv() const;
};

/// BFS distances from one source to every vertex of P_n, one byte per
/// vertex, indexed by LexRank.
///
/// On-disk layout (little endian, 20-byte header):
///   "PNKD" | version u8 = 1 | n u8 | source rank u64 | 6 zero bytes |
///   n! payload bytes
class DistanceField {
 public:
  static constexpr std::uint8_t kUnvisited = 255;
  static constexpr std::uint8_t kFileVersion = 1;
  static constexpr std::size_t kHeaderSize = 20;

  DistanceField(int n, Rank source, std::vector<std::uint8_t> dist);

  int degree() const noexcept { return n_; }
  Rank source() const noexcept { return source_; }
  std::uint64_t size() const noexcept { return dist_.size(); }

  std::uint8_t operator[](Rank r) const noexcept { return dist_[r]; }
  std::uint8_t at(const Permutation& p) const;
  const std::vector<std::uint8_t>& bytes() const noexcept { return dist_; }

  bool complete() const noexcept;
  int eccentricity() const noexcept;
  LayerProfile layer_profile() const;

  void write(std::ostream& out) const;
  static DistanceField read(std::istream& in);

  /// Writes to a temporary sibling and renames it into place.
  void save(const std::filesystem::path& path) const;
  static DistanceField load(const std::filesystem::path& path);

 private:
  int n_;
  Rank source_;
  std::vector<std::uint8_t> dist_;
};

}  // namespace pancake
