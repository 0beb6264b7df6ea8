// Copyright 2026 The wmphase Authors
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

#ifndef WMPHASE_ERROR_H
#define WMPHASE_ERROR_H

#include <stdexcept>
#include <string>

namespace wmphase {

enum class ErrorCode {
    kNonFinite,
    kNoSignChange,
    kNoConvergence,
    kBadReadout,
    kInfiniteN,
    kIndexOutOfRange,
    kNullState,
    kUndefinedAtCriticalPoint,
    kNotQuantized,
    kUndefinedPhase,
    kTooLargeForBruteForce,
    kOrthogonalNeighbors,
    kDegenerateDenominator,
    kTooLargeForExactS,
    kInvalidArgument,
    kIoError,
};

const char *error_code_name(ErrorCode code);

/// True for errors caused by bad input (as opposed to a numerical failure on valid input).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace wmphase

#endif
