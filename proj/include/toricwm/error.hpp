// Copyright 2026 The toricwm Authors
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

#ifndef TORICWM_ERROR_HPP
#define TORICWM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricwm {

enum class ErrorCode {
  kNotContained,
  kNotSaturated,
  kNotUnimodular,
  kZeroVector,
  kDimensionMismatch,
  kInfiniteIndex,
  kDuplicateCharacter,
  kNotPrimitive,
  kEmptySubset,
  kInvalidIndex,
  kNotAPoint,
  kNotComplete,
  kInvalidPartition,
  kNotInPoset,
  kInvalidBuildingSet,
  kNotInBuildingSet,
  kNotNested,
  kNoElementContained,
  kIsMinimal,
  kNotLocalized,
  kNotAdapted,
  kNoConstantLayer,
  kOutsideDomain,
  kOnDivisor,
  kNotInOverlap,
  kInvalidGerm,
  kParseError,
  kUnknownCommand,
};

std::string_view error_name(ErrorCode code);

/// Domain error raised by the library. The code identifies the violated
/// precondition; the message carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricwm

#endif  // TORICWM_ERROR_HPP
