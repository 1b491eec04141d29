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

/*
 * Polynomial expressions.
 *
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := atom ['^' ['+'|'-'] integer]
 *   atom   := integer | 'x' | 'X' | '(' expr ')'
 *           | 'p'                      Q_p only, the prime
 *           | 't'                      F_q((t)) only, the uniformizer
 *           | '[' int (',' int)* ']'   F_q((t)) only, an element of F_q
 *                                      as coefficients of 1, y, y^2, ...
 *
 * Division is by nonzero constants only. Powers of anything involving x
 * must be non-negative.
 */

#ifndef LOCALROOTS_PARSE_HPP
#define LOCALROOTS_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "localroots/poly.hpp"

namespace localroots {

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string expected);
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

Poly parse_poly(std::string_view text, const FieldContext& field);

/// A constant expression; throws BadFieldElement if x occurs.
KElement parse_element(std::string_view text, const FieldContext& field);

/// Output is accepted by parse_poly and reproduces the same polynomial.
std::string format_poly(const Poly& f);
std::string format_element(const KElement& x, const FieldContext& field);

}  // namespace localroots

#endif  // LOCALROOTS_PARSE_HPP
