// Copyright 2026 The Antimagic Orientation Authors
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

namespace antimagic {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kEndpointOutOfRange,
  kInvalidArgument,
  kNotBijective,
  kOddDegree,
  kDisconnected,
  kUnsupportedDegree,
  kNotRegular,
  kInfeasible,
  kRejectionLimit,
  kSizeCap,
  kParse,
  kPrecondition,
  kInternal,
};

// The error type thrown by every module. `code()` lets callers and tests
// distinguish failure modes without matching on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace antimagic
