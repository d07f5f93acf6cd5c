// Copyright 2026 The gkpsim Authors
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

#include "gkpsim/error.h"

namespace gkpsim {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidDenominator:
            return "invalid-denominator";
        case ErrorCode::Domain:
            return "domain";
        case ErrorCode::UnsupportedModulus:
            return "unsupported-modulus";
        case ErrorCode::NotCoprime:
            return "reduce-first";
        case ErrorCode::EmptyInterval:
            return "empty-interval";
        case ErrorCode::ModeMismatch:
            return "mode-mismatch";
        case ErrorCode::IndexOutOfRange:
            return "index-out-of-range";
        case ErrorCode::NotSymplectic:
            return "not-symplectic";
        case ErrorCode::Parse:
            return "parse";
        case ErrorCode::NotSimulatable:
            return "not-simulatable";
        case ErrorCode::DivergentSeries:
            return "divergent-series";
        case ErrorCode::IdentityPath:
            return "use-identity-path";
        case ErrorCode::EmptyGrid:
            return "empty-grid";
        case ErrorCode::Unsupported:
            return "unsupported";
        case ErrorCode::Io:
            return "io";
    }
    return "unknown";
}

ParseError::ParseError(size_t line, size_t column, const std::string &message)
    : Error(ErrorCode::Parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {
}

}  // namespace gkpsim
