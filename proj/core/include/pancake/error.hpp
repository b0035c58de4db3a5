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
#include <stdexcept>
#include <string>

namespace pancake {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reversal index outside [2, n].
class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class RankOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed permutation text or file contents.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A call whose documented precondition does not hold (wrong degree,
/// missing distance field, unsupported parameter range).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Refusal to start a run whose memory footprint exceeds the budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required_bytes, std::uint64_t budget_bytes,
                 const std::string& what)
      : Error(what), required_(required_bytes), budget_(budget_bytes) {}

  std::uint64_t required_bytes() const noexcept { return required_; }
  std::uint64_t budget_bytes() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Walk enumeration would exceed the configured node budget. Raised before
/// any partial result is produced.
class NodeBudgetExceeded : public Error {
 public:
  NodeBudgetExceeded(std::uint64_t required_nodes, std::uint64_t budget_nodes,
                     const std::string& what)
      : Error(what), required_(required_nodes), budget_(budget_nodes) {}

  std::uint64_t required_nodes() const noexcept { return required_; }
  std::uint64_t budget_nodes() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace pancake
