// Copyright 2026 The wpolar Authors
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

#include "wpolar/errors.hpp"

namespace wpolar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateHex: return "DuplicateHex";
    case ErrorCode::kDisconnectedHexes: return "DisconnectedHexes";
    case ErrorCode::kHasHoles: return "HasHoles";
    case ErrorCode::kParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::kMalformedComponent: return "MalformedComponent";
    case ErrorCode::kMalformedGraph: return "MalformedGraph";
    case ErrorCode::kFormulaUnavailable: return "FormulaUnavailable";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace wpolar
