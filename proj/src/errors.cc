// Copyright 2026 The qmonogamy Authors
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

#include "qmono/errors.h"

namespace qmono {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::UnknownLabel:
            return "UnknownLabel";
        case ErrorCode::NotDensityMatrix:
            return "NotDensityMatrix";
        case ErrorCode::OutOfRange:
            return "OutOfRange";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::BadParamLength:
            return "BadParamLength";
        case ErrorCode::OverlappingParties:
            return "OverlappingParties";
        case ErrorCode::WrongArity:
            return "WrongArity";
        case ErrorCode::NotPure:
            return "NotPure";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {
}

}  // namespace qmono
