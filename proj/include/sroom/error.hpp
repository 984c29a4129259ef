// Copyright 2026 The sroom Authors.
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

#ifndef SROOM_ERROR_HPP_
#define SROOM_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sroom {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidAgent,
  kEmptyTieGroup,
  kAsymmetricAcceptability,
  kDuplicateInOrder,
  kIsolatedAgent,
  kInvalidMatching,
  kInvalidOrder,
  kBudgetExceeded,
  kTieGroupTooLarge,
  kTooManyAgents,
  kTiesUnsupported,
  kNoMutualPair,
  kNotComplete,
  kNotNarcissistic,
  kDegreeTooHigh,
  kKOutOfRange,
  kNotIndependent,
  kWrongSize,
  kUnstableMatching,
  kInternalInvariantViolation,
  kUnknownFixture,
  kParseError,
  kIoError,
};

// Stable, machine-parsable name of an error code (used by the CLI).
std::string_view error_code_name(ErrorCode code);

// Library-wide exception. `agents` carries the ids named by the error, e.g.
// the (i, j) of an asymmetric acceptability violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::uint32_t> agents = {})
      : std::runtime_error(message), code_(code), agents_(std::move(agents)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::uint32_t>& agents() const noexcept { return agents_; }

 private:
  ErrorCode code_;
  std::vector<std::uint32_t> agents_;
};

}  // namespace sroom

#endif  // SROOM_ERROR_HPP_
