// Copyright 2026 The Centering Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centering {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Partial orders.
class CycleError : public Error {
 public:
  using Error::Error;
};

class UnknownEntity : public Error {
 public:
  using Error::Error;
};

class EmptyCarrier : public Error {
 public:
  using Error::Error;
};

class NotASubset : public Error {
 public:
  using Error::Error;
};

// Context update.
class UnresolvedMention : public Error {
 public:
  using Error::Error;
};

// Candidate location.
class EmptyLocalState : public Error {
 public:
  using Error::Error;
};

class NoCandidates : public Error {
 public:
  using Error::Error;
};

// Input parsing. Line and column are 1-based; column 0 means "whole line".
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string &message, std::size_t line, std::size_t column)
      : Error(Format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string &message, std::size_t line,
                            std::size_t column) {
    std::string where = std::to_string(line);
    if (column > 0) where += ":" + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

class DuplicateRuleId : public Error {
 public:
  using Error::Error;
};

class UndeclaredEntity : public Error {
 public:
  using Error::Error;
};

class BadAgreement : public Error {
 public:
  using Error::Error;
};

// Brute-force oracles refuse carriers they cannot enumerate.
class CarrierTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace centering
