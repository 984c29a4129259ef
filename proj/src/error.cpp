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

#include "sroom/error.hpp"

namespace sroom {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidAgent: return "InvalidAgent";
    case ErrorCode::kEmptyTieGroup: return "EmptyTieGroup";
    case ErrorCode::kAsymmetricAcceptability: return "AsymmetricAcceptability";
    case ErrorCode::kDuplicateInOrder: return "DuplicateInOrder";
    case ErrorCode::kIsolatedAgent: return "IsolatedAgent";
    case ErrorCode::kInvalidMatching: return "InvalidMatching";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kTieGroupTooLarge: return "TieGroupTooLarge";
    case ErrorCode::kTooManyAgents: return "TooManyAgents";
    case ErrorCode::kTiesUnsupported: return "TiesUnsupported";
    case ErrorCode::kNoMutualPair: return "NoMutualPair";
    case ErrorCode::kNotComplete: return "NotComplete";
    case ErrorCode::kNotNarcissistic: return "NotNarcissistic";
    case ErrorCode::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::kKOutOfRange: return "KOutOfRange";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kWrongSize: return "WrongSize";
    case ErrorCode::kUnstableMatching: return "UnstableMatching";
    case ErrorCode::kInternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace sroom
