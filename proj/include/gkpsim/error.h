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

#ifndef GKPSIM_ERROR_H
#define GKPSIM_ERROR_H

#include <stdexcept>
#include <string>

namespace gkpsim {

enum class ErrorCode {
    InvalidDenominator,
    Domain,
    UnsupportedModulus,
    NotCoprime,
    EmptyInterval,
    ModeMismatch,
    IndexOutOfRange,
    NotSymplectic,
    Parse,
    NotSimulatable,
    DivergentSeries,
    IdentityPath,
    EmptyGrid,
    Unsupported,
    Io,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Raised by the circuit parser. Line and column are 1-based.
class ParseError : public Error {
   public:
    ParseError(size_t line, size_t column, const std::string &message);
    size_t line() const noexcept {
        return line_;
    }
    size_t column() const noexcept {
        return column_;
    }
    const std::string &detail() const noexcept {
        return detail_;
    }

   private:
    size_t line_;
    size_t column_;
    std::string detail_;
};

}  // namespace gkpsim

#endif
