/*
Copyright 2026 The proflat Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proflat {

/// Base class of every error raised by the library. The C API maps each
/// subclass onto one status code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (element not in the
/// group, prime not dividing the order, subgroups of different parents...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A documented precondition does not hold (e.g. quotient by a non-normal
/// subgroup).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A configured size bound was exceeded. The message names the bound.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A constructor rejected its parameters (invalid action, non-surjective map).
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace proflat
