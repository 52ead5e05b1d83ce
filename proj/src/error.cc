// Copyright 2026 The walkbreak Authors.
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

#include "walkbreak/error.h"

namespace walkbreak {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIllegalClaim: return "IllegalClaim";
    case ErrorCode::kBadBias: return "BadBias";
    case ErrorCode::kTurnError: return "TurnError";
    case ErrorCode::kIllegalTraversal: return "IllegalTraversal";
    case ErrorCode::kBrokenWalk: return "BrokenWalk";
    case ErrorCode::kStrategyFault: return "StrategyFault";
    case ErrorCode::kValueOverflow: return "ValueOverflow";
    case ErrorCode::kOracleBudget: return "OracleBudget";
    case ErrorCode::kNoActiveBox: return "NoActiveBox";
    case ErrorCode::kBoxExhausted: return "BoxExhausted";
    case ErrorCode::kNotSubgraph: return "NotSubgraph";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace walkbreak
