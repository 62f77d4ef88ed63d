// Copyright 2026 The Authors.
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

#include "skewmat/error.h"

namespace skewmat {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime:
      return "E_NOT_PRIME";
    case ErrorCode::kReducible:
      return "E_REDUCIBLE";
    case ErrorCode::kNotPrimitive:
      return "E_NOT_PRIMITIVE";
    case ErrorCode::kTableCapExceeded:
      return "E_TABLE_CAP";
    case ErrorCode::kDivisionByZero:
      return "E_DIVISION_BY_ZERO";
    case ErrorCode::kCtxMismatch:
      return "E_CTX_MISMATCH";
    case ErrorCode::kNotASubfield:
      return "E_NOT_A_SUBFIELD";
    case ErrorCode::kSyntaxError:
      return "E_SYNTAX";
    case ErrorCode::kDegenerateModulus:
      return "E_DEGENERATE_MODULUS";
    case ErrorCode::kDeltaNotZero:
      return "E_DELTA_NOT_ZERO";
    case ErrorCode::kNotInClassOne:
      return "E_NOT_IN_CLASS_ONE";
    case ErrorCode::kGroundSetTooLarge:
      return "E_GROUND_SET_TOO_LARGE";
    case ErrorCode::kZeroPolynomial:
      return "E_ZERO_POLYNOMIAL";
    case ErrorCode::kCapExceeded:
      return "E_CAP_EXCEEDED";
    case ErrorCode::kInvalidArgument:
      return "E_INVALID_ARGUMENT";
    case ErrorCode::kInternal:
      return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

}  // namespace skewmat
