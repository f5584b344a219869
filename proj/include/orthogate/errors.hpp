// Copyright 2026 The orthogate Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthogate {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (non-square, length mismatch, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input that violates its documented
/// precondition (e.g. a non-unitary matrix handed to eig_unitary).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two members of a family that was required to commute do not.
class CommutationError : public Error {
 public:
  CommutationError(std::size_t first, std::size_t second, double norm);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  double norm() const noexcept { return norm_; }

 private:
  std::size_t first_;
  std::size_t second_;
  double norm_;
};

/// An iterative numerical procedure could not reach the requested residual.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A gate description is well formed but violates a gate invariant
/// (non-unitary member, failed orthogonality, wrong dimensions).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed gate-spec document. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The requested protocol does not exist for this gate (e.g. the reverse
/// protocol on an asymmetric gate).
class ProtocolUnavailable : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthogate
