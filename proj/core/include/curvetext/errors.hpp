// Copyright 2026 The Curvetext Authors
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

#ifndef CURVETEXT_ERRORS_HPP
#define CURVETEXT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvetext {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (t outside [0, 1],
/// index out of range, non-finite coordinate, wrong point count...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The input geometry cannot be processed (all points coincide, zero-length
/// boundary, ...).
class DegenerateGeometry : public Error {
public:
    using Error::Error;
};

/// A least-squares system is too ill-conditioned to be solved reliably.
class ConditioningError : public Error {
public:
    ConditioningError(const std::string& what, double conditionEstimate)
        : Error(what), condition_(conditionEstimate) {}

    double conditionEstimate() const noexcept { return condition_; }

private:
    double condition_;
};

/// Malformed annotation text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A BezierGT document violates its schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace curvetext

#endif // CURVETEXT_ERRORS_HPP
