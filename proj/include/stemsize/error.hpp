// SPDX-License-Identifier: Apache-2.0
//
// Exception hierarchy shared by every stemsize module.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stemsize {

/// Base class of everything the library throws on purpose.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: a precondition of an operation does not hold.
class validation_error : public error {
 public:
  using error::error;
};

/// Syntax error in the algebra DSL, with a 1-based source position.
class parse_error : public validation_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : validation_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured resource ceiling (truncation, enumeration count) was hit.
class resource_error : public error {
 public:
  using error::error;
};

}  // namespace stemsize
