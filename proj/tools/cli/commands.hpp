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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pancake/bfs.hpp"
#include "pancake/table1.hpp"

namespace pancake::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerifiedFalse = 2,
  kExitResource = 3,
};

/// Settings shared by every subcommand. Each flag can also be supplied as
/// an environment variable named PANCAKE_<FLAG>, e.g. PANCAKE_WORKERS=8.
struct RunConfig {
  std::string command;
  int n = 0;
  std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
  int worker_count = 1;
  std::string output_path;
  std::string output_format;  // json | csv | text; empty = command default
  std::string mset_method = "exact";
  int chunk_size = 5;
  bool allow_large = false;
  std::span<const TabulatedDiameter> table1 = pancake::table1();
};

/// Parses argv and runs one subcommand, writing reports to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pancake::cli
