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

#include "pancake/bfs.hpp"
#include "pancake/bound.hpp"
#include "pancake/distance_field.hpp"
#include "pancake/error.hpp"
#include "pancake/gp_stats.hpp"
#include "pancake/ham.hpp"
#include "pancake/permutation.hpp"
#include "pancake/sorter.hpp"
#include "pancake/structure.hpp"
#include "pancake/table1.hpp"
