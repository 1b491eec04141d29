// Copyright 2026 The localroots Authors
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

#ifndef LOCALROOTS_ERROR_HPP
#define LOCALROOTS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace localroots {

enum class ErrorCode {
    InvalidField,
    BadFieldElement,
    ZeroElement,
    ZeroInverse,
    InexactDivision,
    NotIntegral,
    NotMonic,
    ZeroPolynomial,
    NotRegular,
    VanishingDiscriminant,
    HenselHypothesisFailed,
    NonConvergence,
    BudgetExceeded,
    SyntaxError,
    NonIntegerExponent,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `detail` carries machine-readable
/// context (positions, offending values) and may be empty.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string detail = {})
        : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace localroots

#endif  // LOCALROOTS_ERROR_HPP
