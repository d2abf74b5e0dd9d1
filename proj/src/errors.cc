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

#include "lpbandit/errors.h"

namespace lpbandit {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "InvalidInput";
    case ErrorCode::kInvalidExponent:
      return "InvalidExponent";
    case ErrorCode::kNumericalFailure:
      return "NumericalFailure";
    case ErrorCode::kInadmissibleRegime:
      return "InadmissibleRegime";
    case ErrorCode::kInfeasibleAction:
      return "InfeasibleAction";
    case ErrorCode::kFitUndefined:
      return "FitUndefined";
    case ErrorCode::kIOError:
      return "IOError";
    case ErrorCode::kConfigError:
      return "ConfigError";
  }
  return "Unknown";
}

}  // namespace lpbandit
