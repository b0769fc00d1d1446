// Copyright 2026 The Topoforge Authors
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

#include "core/error.hpp"

namespace topoforge {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kInvalidInput: return "invalid_input";
    case ErrorCode::kOrderOverflow: return "order_overflow";
    case ErrorCode::kDegenerateGrid: return "degenerate_grid";
    case ErrorCode::kConfiguration: return "configuration";
    case ErrorCode::kShapeMismatch: return "shape_mismatch";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kUnknownVersion: return "unknown_version";
    case ErrorCode::kBadMetadata: return "bad_metadata";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace topoforge
