// Copyright 2026 The Authors.
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

#ifndef TIMTIN_ERROR_HPP_
#define TIMTIN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace timtin {

enum class ErrorCode {
  kParse,
  kNonSquare,
  kZeroDirectLink,
  kDimensionMismatch,
  kPositivePowerExponent,
  kEmptyVector,
  kUserOutOfRange,
  kNegativeExponent,
  kNumericalFailure,
  kInvalidArgument,
  kMapMismatch,
  kWeightMismatch,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kZeroDirectLink: return "ZeroDirectLink";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kPositivePowerExponent: return "PositivePowerExponent";
    case ErrorCode::kEmptyVector: return "EmptyVector";
    case ErrorCode::kUserOutOfRange: return "UserOutOfRange";
    case ErrorCode::kNegativeExponent: return "NegativeExponent";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMapMismatch: return "MapMismatch";
    case ErrorCode::kWeightMismatch: return "WeightMismatch";
  }
  return "Unknown";
}

/// Domain error. Every failure the library reports carries one of the codes
/// above so the CLI can serialize it as {"error": ..., "kind": ...}.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view kind() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace timtin

#endif  // TIMTIN_ERROR_HPP_
