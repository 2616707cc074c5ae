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

#include "chronocycle/errors.hpp"

namespace chronocycle {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroState: return "ZeroState";
        case ErrorCode::GridTooCoarse: return "GridTooCoarse";
        case ErrorCode::OffGridShift: return "OffGridShift";
        case ErrorCode::BadPumpCenter: return "BadPumpCenter";
        case ErrorCode::RegimeViolation: return "RegimeViolation";
        case ErrorCode::EnvelopeClipped: return "EnvelopeClipped";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::ModelMismatch: return "ModelMismatch";
        case ErrorCode::NoDipFound: return "NoDipFound";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace chronocycle
