// Copyright 2026 The mixext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIXEXT_ERROR_HPP
#define MIXEXT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixext {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tuple, family descriptor or named-graph parameter outside its domain.
class InvalidDescriptor : public Error {
 public:
  using Error::Error;
};

/// Structurally bad input to a pure function (non-monic polynomial, wrong degree, ...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Graph order above the configured maximum.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Two exact computations that must agree did not.
class ClassificationViolation : public Error {
 public:
  using Error::Error;
};

/// Text input that could not be parsed; carries the 0-based offending position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mixext

#endif  // MIXEXT_ERROR_HPP
