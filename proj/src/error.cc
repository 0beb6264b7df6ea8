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

#include "wmphase/error.h"

namespace wmphase {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kNonFinite:
            return "NonFinite";
        case ErrorCode::kNoSignChange:
            return "NoSignChange";
        case ErrorCode::kNoConvergence:
            return "NoConvergence";
        case ErrorCode::kBadReadout:
            return "BadReadout";
        case ErrorCode::kInfiniteN:
            return "InfiniteN";
        case ErrorCode::kIndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::kNullState:
            return "NullState";
        case ErrorCode::kUndefinedAtCriticalPoint:
            return "UndefinedAtCriticalPoint";
        case ErrorCode::kNotQuantized:
            return "NotQuantized";
        case ErrorCode::kUndefinedPhase:
            return "UndefinedPhase";
        case ErrorCode::kTooLargeForBruteForce:
            return "TooLargeForBruteForce";
        case ErrorCode::kOrthogonalNeighbors:
            return "OrthogonalNeighbors";
        case ErrorCode::kDegenerateDenominator:
            return "DegenerateDenominator";
        case ErrorCode::kTooLargeForExactS:
            return "TooLargeForExactS";
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
        case ErrorCode::kIoError:
            return "IoError";
    }
    return "Unknown";
}

bool is_validation_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::kBadReadout:
        case ErrorCode::kInfiniteN:
        case ErrorCode::kIndexOutOfRange:
        case ErrorCode::kTooLargeForBruteForce:
        case ErrorCode::kTooLargeForExactS:
        case ErrorCode::kInvalidArgument:
        case ErrorCode::kIoError:
            return true;
        default:
            return false;
    }
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace wmphase
