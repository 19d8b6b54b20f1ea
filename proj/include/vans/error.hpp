// Copyright 2026 The VAns Authors
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

#include <stdexcept>
#include <string>

namespace vans {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidBlockError : public Error {
    using Error::Error;
};

class DimensionMismatchError : public Error {
    using Error::Error;
};

/// Thrown when a dense object would exceed the memory guard.
class TooLargeError : public Error {
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string &what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    [[nodiscard]] int line() const noexcept { return line_; }

  private:
    int line_;
};

class InvalidProblemError : public Error {
    using Error::Error;
};

class OptimizerDivergenceError : public Error {
    using Error::Error;
};

/// The rewrite loop exceeded its pass cap.
class TerminationError : public Error {
    using Error::Error;
};

class ConfigError : public Error {
    using Error::Error;
};

} // namespace vans
