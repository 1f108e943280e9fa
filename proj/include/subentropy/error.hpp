// Copyright 2026 The subentropy Authors
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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subentropy {

enum class ErrorKind {
  NonHermitian,
  DomainError,
  DimensionMismatch,
  TraceMismatch,
  NonUnital,
  AlgebraMismatch,
  UnsupportedGroup,
  NotDensity,
  InvalidOrder,
  SolverBudgetExceeded,
  NotPartition,
  NotCND,
  BadDiagonal,
  Asymmetric,
  NotEquivalence,
  NoGap,
  NegativeTime,
  MuNotContractive,
  InvalidSchurMap,
  InvalidGenerator,
  InvalidArgument,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

  // Optional numeric witness (CND violation vector, non-transitive triple).
  const std::vector<double>& witness() const { return witness_; }
  Error& with_witness(std::vector<double> w) {
    witness_ = std::move(w);
    return *this;
  }

 private:
  ErrorKind kind_;
  std::vector<double> witness_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace subentropy
