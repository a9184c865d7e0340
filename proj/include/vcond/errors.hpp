/* Copyright 2026 The viralcond authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vcond {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: bad parameters, disconnected graph, self-loop, isolated node.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A file could not be opened or read.
class IoError : public Error {
public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A random construction failed after its bounded retry budget.
class GenerationError : public Error {
public:
  using Error::Error;
};

/// An iteration did not converge; carries the last residual seen.
class NumericalError : public Error {
public:
  NumericalError(const std::string& message, double residual)
      : Error(message), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// Argument outside its documented domain.
class RangeError : public Error {
public:
  using Error::Error;
};

}  // namespace vcond
