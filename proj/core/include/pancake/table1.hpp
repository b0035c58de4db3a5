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

#include <optional>
#include <span>

namespace pancake {

struct TabulatedDiameter {
  int n;
  int diameter;
};

/// Known pancake graph diameters for 2 <= n <= 19.
std::span<const TabulatedDiameter> table1();

/// Tabulated diameter of P_n, or nullopt outside 2..19.
std::optional<int> table1_diameter(int n);

}  // namespace pancake
