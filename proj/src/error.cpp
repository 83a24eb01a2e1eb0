/* Copyright (C) 2026 The symsum Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "symsum/error.hpp"

namespace symsum {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kNotRationalInteger: return "NotRationalInteger";
    case ErrorCode::kInvalidComposition: return "InvalidComposition";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kOddCharacteristic: return "OddCharacteristic";
    case ErrorCode::kInsufficientTerms: return "InsufficientTerms";
    case ErrorCode::kNoRecurrenceFound: return "NoRecurrenceFound";
  }
  return "Unknown";
}

}  // namespace symsum
