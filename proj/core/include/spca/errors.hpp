// Copyright 2026 The spca authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spca {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data was violated (bad dimension,
/// non-finite entry, infeasible point, out-of-range index, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Degenerate input for which the operation has no distinguished answer
/// (e.g. the zero vector handed to the linear subproblem solver).
class DegenerateInputError : public InputError {
 public:
  using InputError::InputError;
};

/// An iterative kernel failed to reach its tolerance within its budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

/// A combinatorial operation refused to run because its size bound was
/// exceeded; carries the offending count.
class RefusalError : public Error {
 public:
  RefusalError(const std::string& what, std::uint64_t count)
      : Error(what), count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_ = 0;
};

/// Malformed input file; line and column are 1-based (0 = unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

}  // namespace spca
