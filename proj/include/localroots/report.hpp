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

// JSON views of the library results. Rationals are strings ("-3/2"),
// infinite valuations are "inf", and field elements use the parser syntax.

#ifndef LOCALROOTS_REPORT_HPP
#define LOCALROOTS_REPORT_HPP

#include <json.hpp>

#include "localroots/oracle.hpp"
#include "localroots/regular.hpp"

namespace localroots {

using Json = nlohmann::ordered_json;

Json field_json(const FieldContext& field);
/// Accepts {"p": 3, "mode": "padic"|"laurent", "f": 1}.
FieldContext field_from_json(const Json& j);

Json poly_json(const Poly& f);
/// Accepts {"terms": [[k, "coeff"], ...]}; exponents must be distinct and >= 0.
Poly poly_from_json(const Json& j, const FieldContext& field);

Json polygon_json(const Poly& f);
Json regularity_json(const RegularityReport& report);
Json count_json(const RootCount& count);
Json discriminant_json(const Poly& f);
Json roots_json(const RootSet& roots, const FieldContext& field);
Json bounds_json(const BoundsReport& report);
Json error_json(const Error& e);

}  // namespace localroots

#endif  // LOCALROOTS_REPORT_HPP
