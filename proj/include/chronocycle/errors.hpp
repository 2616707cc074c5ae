// Copyright 2026 The Chronocycle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHRONOCYCLE_ERRORS_HPP
#define CHRONOCYCLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chronocycle {

enum class ErrorCode {
    ZeroState,
    GridTooCoarse,
    OffGridShift,
    BadPumpCenter,
    RegimeViolation,
    EnvelopeClipped,
    BudgetExceeded,
    ModelMismatch,
    NoDipFound,
    InvalidArgument,
    ConfigError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class SimError : public std::runtime_error {
  public:
    SimError(ErrorCode code, const std::string& what_arg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what_arg), code_(code) {}

    ErrorCode code() const { return code_; }

    /// Config/usage errors exit with 1, numerical-regime errors with 2.
    bool is_config_error() const {
        return code_ == ErrorCode::ConfigError || code_ == ErrorCode::InvalidArgument ||
               code_ == ErrorCode::IoError;
    }

  private:
    ErrorCode code_;
};

}  // namespace chronocycle

#endif
