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

#ifndef LOCALROOTS_SVG_HPP
#define LOCALROOTS_SVG_HPP

#include <string>

#include "localroots/newton.hpp"

namespace localroots {

/// SVG 1.1 drawing (viewBox 0 0 640 480) of the support points, the lattice
/// grid and the lower hull, with each lower edge labelled by its slope.
std::string newton_svg(const NewtonPolygon& polygon);

}  // namespace localroots

#endif  // LOCALROOTS_SVG_HPP
