// Copyright 2026 The graphzeta Authors
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

#ifndef GRAPHZETA_ERROR_HPP
#define GRAPHZETA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphzeta {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range vertex ids, bad rationals, missing weights.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// An operation was called outside its domain (series log with c0 != 1,
/// inversion of a zero rational function, non-square determinant, ...).
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// Matrix is singular where an inverse was requested.
class SingularMatrixError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

/// Two routes that must agree did not. Carries a human readable report.
class IdentityMismatch : public Error {
   public:
    using Error::Error;
};

/// Numeric eigensolver or root finder ran out of iterations.
class ConvergenceError : public Error {
   public:
    using Error::Error;
};

/// Instance file syntax error; `line()` is 1-based.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace graphzeta

#endif
