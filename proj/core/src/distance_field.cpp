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

#include "pancake/distance_field.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "pancake/atomic_file.hpp"
#include "pancake/error.hpp"

namespace pancake {
namespace {

constexpr std::array<char, 4> kMagic = {'P', 'N', 'K', 'D'};

}  // namespace

std::uint64_t LayerProfile::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::string LayerProfile::to_csv() const {
  std::string out = "distance,count\n";
  for (std::size_t d = 0; d < counts.size(); ++d) {
    out += std::to_string(d) + "," + std::to_string(counts[d]) + "\n";
  }
  return out;
}

DistanceField::DistanceField(int n, Rank source, std::vector<std::uint8_t> dist)
    : n_(n), source_(source), dist_(std::move(dist)) {
  if (dist_.size() != factorial(n)) {
    throw PreconditionError("distance field for n=" + std::to_string(n) +
                            " needs " + std::to_string(factorial(n)) +
                            " entries, got " + std::to_string(dist_.size()));
  }
  if (source_ >= dist_.size()) {
    throw RankOutOfRange("source rank " + std::to_string(source_) + " out of range");
  }
}

std::uint8_t DistanceField::at(const Permutation& p) const {
  if (p.degree() != n_) {
    throw DegreeMismatch("permutation of degree " + std::to_string(p.degree()) +
                         " queried in a field of degree " + std::to_string(n_));
  }
  return dist_[rank(p)];
}

bool DistanceField::complete() const noexcept {
  return std::find(dist_.begin(), dist_.end(), kUnvisited) == dist_.end();
}

int DistanceField::eccentricity() const noexcept {
  int ecc = 0;
  for (auto d : dist_) {
    if (d != kUnvisited && d > ecc) ecc = d;
  }
  return ecc;
}

LayerProfile DistanceField::layer_profile() const {
  std::array<std::uint64_t, 256> hist{};
  for (auto d : dist_) ++hist[d];
  LayerProfile profile;
  profile.n = n_;
  const int ecc = eccentricity();
  profile.counts.assign(hist.begin(), hist.begin() + ecc + 1);
  return profile;
}

void DistanceField::write(std::ostream& out) const {
  std::array<char, kHeaderSize> header{};
  std::memcpy(header.data(), kMagic.data(), kMagic.size());
  header[4] = static_cast<char>(kFileVersion);
  header[5] = static_cast<char>(n_);
  for (int b = 0; b < 8; ++b) {
    header[6 + b] = static_cast<char>((source_ >> (8 * b)) & 0xFF);
  }
  out.write(header.data(), header.size());
  out.write(reinterpret_cast<const char*>(dist_.data()),
            static_cast<std::streamsize>(dist_.size()));
}

DistanceField DistanceField::read(std::istream& in) {
  std::array<char, kHeaderSize> header{};
  if (!in.read(header.data(), header.size())) {
    throw ParseError("distance field: truncated header");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), header.begin())) {
    throw ParseError("distance field: bad magic");
  }
  if (static_cast<std::uint8_t>(header[4]) != kFileVersion) {
    throw ParseError("distance field: unsupported version " +
                     std::to_string(static_cast<std::uint8_t>(header[4])));
  }
  const int n = static_cast<std::uint8_t>(header[5]);
  if (n < 2 || n > kMaxDegree) {
    throw ParseError("distance field: bad degree " + std::to_string(n));
  }
  Rank source = 0;
  for (int b = 7; b >= 0; --b) {
    source = (source << 8) | static_cast<std::uint8_t>(header[6 + b]);
  }
  for (std::size_t b = 14; b < kHeaderSize; ++b) {
    if (header[b] != 0) throw ParseError("distance field: reserved bytes not zero");
  }
  std::vector<std::uint8_t> dist(factorial(n));
  if (!in.read(reinterpret_cast<char*>(dist.data()),
               static_cast<std::streamsize>(dist.size()))) {
    throw ParseError("distance field: truncated payload");
  }
  return DistanceField(n, source, std::move(dist));
}

void DistanceField::save(const std::filesystem::path& path) const {
  write_file_atomically(path, [this](std::ostream& out) { write(out); });
}

DistanceField DistanceField::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read(in);
}

}  // namespace pancake
