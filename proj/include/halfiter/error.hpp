// Copyright 2026 The halfiter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace halfiter {

enum class ErrorCode {
  kInvalidArgument = 2,
  kParse = 3,
  kOrderMismatch = 4,
  kOrderTooLarge = 5,
  kIndexOutOfRange = 6,
  kZeroScale = 7,
  kZeroLeading = 8,
  kNonSquareLeading = 9,
  kNegativeBranch = 10,
  kLeadingNotOne = 11,
  kNonIntegerInput = 12,
  kIntegralityViolation = 13,
  kUnknownCatalog = 14,
  kFixtureMissing = 15,
  kInvalidId = 16,
  kNetwork = 17,
  kUnknownId = 18,
  kConventionMismatch = 19,
  kIo = 20,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure in the library surfaces as this exception. The code doubles
/// as the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_status() const noexcept { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

}  // namespace halfiter
