// Copyright 2026 The Gateway Games Authors
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

#include "gateway/error.h"

namespace gateway {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDisconnectedGraph:
      return "DisconnectedGraph";
    case ErrorCode::kSelfLoop:
      return "SelfLoop";
    case ErrorCode::kNodeIdOutOfRange:
      return "NodeIdOutOfRange";
    case ErrorCode::kEmptyProfile:
      return "EmptyProfile";
    case ErrorCode::kInvalidAlpha:
      return "InvalidAlpha";
    case ErrorCode::kStateSpaceTooLarge:
      return "StateSpaceTooLarge";
    case ErrorCode::kParameterOutOfRange:
      return "ParameterOutOfRange";
    case ErrorCode::kGirthTooSmall:
      return "GirthTooSmall";
    case ErrorCode::kConstructionNotEquilibrium:
      return "ConstructionNotEquilibrium";
    case ErrorCode::kElementUncovered:
      return "ElementUncovered";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace gateway
