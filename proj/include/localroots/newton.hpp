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

#ifndef LOCALROOTS_NEWTON_HPP
#define LOCALROOTS_NEWTON_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "localroots/poly.hpp"

namespace localroots {

/// (exponent, valuation) pair. Valuations of elements of K are integers, so
/// the whole hull is computed in integer arithmetic.
struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct NewtonPolygon {
    std::vector<LatticePoint> support;         // sorted by x, then y
    std::vector<LatticePoint> lower_vertices;  // left to right, strictly convex
};

struct LowerEdge {
    LatticePoint left;
    LatticePoint right;
    mpq_class slope;
    std::int64_t length = 0;
    /// Every support point on the closed segment, endpoints included.
    std::vector<LatticePoint> support_on_edge;
};

/// Lower convex hull of an arbitrary finite point set (monotone chain).
NewtonPolygon lower_hull(std::vector<LatticePoint> points);

/// Hull of {(i, v(a_i)) : a_i != 0}; throws ZeroPolynomial.
NewtonPolygon newton_polygon(const Poly& f);

/// Edges of the lower hull, left to right; slopes strictly increase.
std::vector<LowerEdge> lower_edges(const NewtonPolygon& polygon);

struct EdgeRootData {
    std::int64_t count = 0;
    mpq_class root_valuation;
};

/// Number of roots in the algebraic closure carried by the edge (its length)
/// and their common valuation (minus the slope).
EdgeRootData edge_root_data(const LowerEdge& edge);

}  // namespace localroots

#endif  // LOCALROOTS_NEWTON_HPP
