// Copyright 2026 The nmrqpe Authors
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

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace nmrqpe {

/// Compact rendering of a double for error messages.
inline std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition or type invariant.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Structured document could not be parsed.
class ParseError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// Inconsistent run configuration (e.g. 2^-n < 2*errbd).
class ConfigError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// A derived quantity fell outside its admissible range.
class RangeError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// Ground state is not separated from the first excited state.
class DegeneracyError : public Error {
   public:
    using Error::Error;
};

/// Probe coherence too small for the phase to be defined.
class ReadoutError : public Error {
   public:
    using Error::Error;
};

/// Pulse compilation missed its fidelity target.
class CompilationError : public Error {
   public:
    using Error::Error;
};

}  // namespace nmrqpe
