// Copyright 2026 The Zeroscope Authors.
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

namespace zeroscope {

enum class ErrorCode {
  kInvalidArgument,
  kNotPSD,
  kTooLarge,
  kOverflow,
  kDimensionMismatch,
  kVertexSetMismatch,
  kOutOfChart,
  kDegenerateAllZero,
  kResultantDegenerate,
  kNewtonDiverged,
  kQuadratureNotConverged,
  kNonPositiveVariance,
  kSolverFailureRate,
  kIoError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures of numerical machinery (as opposed to bad input).
  bool is_numerical() const noexcept {
    return code_ == ErrorCode::kQuadratureNotConverged ||
           code_ == ErrorCode::kNewtonDiverged ||
           code_ == ErrorCode::kResultantDegenerate ||
           code_ == ErrorCode::kSolverFailureRate ||
           code_ == ErrorCode::kNonPositiveVariance;
  }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPSD: return "NotPSD";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kVertexSetMismatch: return "VertexSetMismatch";
    case ErrorCode::kOutOfChart: return "OutOfChart";
    case ErrorCode::kDegenerateAllZero: return "DegenerateAllZero";
    case ErrorCode::kResultantDegenerate: return "ResultantDegenerate";
    case ErrorCode::kNewtonDiverged: return "NewtonDiverged";
    case ErrorCode::kQuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::kNonPositiveVariance: return "NonPositiveVariance";
    case ErrorCode::kSolverFailureRate: return "SolverFailureRate";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace zeroscope
