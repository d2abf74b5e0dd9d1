// Copyright 2026 The lpbandit Authors.
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

#ifndef LPBANDIT_ERRORS_H_
#define LPBANDIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lpbandit {

enum class ErrorCode {
  kInvalidInput,
  kInvalidExponent,
  kNumericalFailure,
  kInadmissibleRegime,
  kInfeasibleAction,
  kFitUndefined,
  kIOError,
  kConfigError,
};

const char* ErrorCodeName(ErrorCode code);

// Base class for every error raised by the library. The code is what callers
// (and the CLI's exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message)
      : Error(ErrorCode::kInvalidInput, message) {}
};

class InvalidExponent : public Error {
 public:
  explicit InvalidExponent(const std::string& message)
      : Error(ErrorCode::kInvalidExponent, message) {}
};

class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& message, double residual)
      : Error(ErrorCode::kNumericalFailure, message), residual_(residual) {}

  // Last residual seen by the failing iteration.
  double residual() const { return residual_; }

 private:
  double residual_;
};

class FitUndefined : public Error {
 public:
  explicit FitUndefined(const std::string& message)
      : Error(ErrorCode::kFitUndefined, message) {}
};

class IOError : public Error {
 public:
  explicit IOError(const std::string& message)
      : Error(ErrorCode::kIOError, message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error(ErrorCode::kConfigError, message) {}
};

}  // namespace lpbandit

#endif  // LPBANDIT_ERRORS_H_
