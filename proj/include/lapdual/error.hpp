// Copyright 2026 The lapdual Authors
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

namespace lapdual {

enum class ErrorCode {
  InvalidGraph,
  InvalidMatrix,
  CapExceeded,
  NotCotreeEdge,
  EmptyOrFullSet,
  NotSquare,
  NotUnimodular,
  NotSymmetric,
  ShapeMismatch,
  InvalidReductionSpec,
  NotMaximalForest,
  UnknownTag,
  LoopCountMismatch,
  BudgetExceeded,
  RowSumNonzero,
  TraceTooLarge,
  NonplanarInput,
  MalformedInput,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotCotreeEdge: return "NotCotreeEdge";
    case ErrorCode::EmptyOrFullSet: return "EmptyOrFullSet";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidReductionSpec: return "InvalidReductionSpec";
    case ErrorCode::NotMaximalForest: return "NotMaximalForest";
    case ErrorCode::UnknownTag: return "UnknownTag";
    case ErrorCode::LoopCountMismatch: return "LoopCountMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::RowSumNonzero: return "RowSumNonzero";
    case ErrorCode::TraceTooLarge: return "TraceTooLarge";
    case ErrorCode::NonplanarInput: return "NonplanarInput";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

/// All library failures are reported through this exception; `code()` tells
/// callers (and the CLI) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lapdual
