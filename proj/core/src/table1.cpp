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

#include "pancake/table1.hpp"

#include <array>

namespace pancake {
namespace {

constexpr std::array<TabulatedDiameter, 18> kTable1 = {{
    {2, 1},   {3, 3},   {4, 4},   {5, 5},   {6, 7},   {7, 8},
    {8, 9},   {9, 10},  {10, 11}, {11, 13}, {12, 14}, {13, 15},
    {14, 16}, {15, 17}, {16, 18}, {17, 19}, {18, 20}, {19, 22},
}};

}  // namespace

std::span<const TabulatedDiameter> table1() { return kTable1; }

std::optional<int> table1_diameter(int n) {
  if (n < 2 || n > 19) return std::nullopt;
  return kTable1[n - 2].diameter;
}

}  // namespace pancake
