// Copyright 2026 The qhcat Authors.
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

#ifndef QHCAT_ERRORS_HPP_
#define QHCAT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhcat {

// Bad input: unknown ids, malformed specs, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cocycle value that must be a unit is zero.
class ZeroCocycleValue : public InputError {
 public:
  using InputError::InputError;
};

// A text document failed to parse.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A configured resource bound (polynomial degree, splitting iterations,
// morphism count) was exceeded. Never a wrong answer, only a refusal.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug or corrupted input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qhcat

#endif  // QHCAT_ERRORS_HPP_
