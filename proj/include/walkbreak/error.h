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

#ifndef WALKBREAK_ERROR_H_
#define WALKBREAK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace walkbreak {

// Values are stable: the C API returns them as integer status codes.
enum class ErrorCode {
  kInvalidConfig = 1,
  kIllegalClaim = 2,
  kBadBias = 3,
  kTurnError = 4,
  kIllegalTraversal = 5,
  kBrokenWalk = 6,
  kStrategyFault = 7,
  kValueOverflow = 8,
  kOracleBudget = 9,
  kNoActiveBox = 10,
  kBoxExhausted = 11,
  kNotSubgraph = 12,
  kParseError = 13,
  kIoError = 14,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace walkbreak

#endif  // WALKBREAK_ERROR_H_
