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

#include "localroots/newton.hpp"

#include <algorithm>

namespace localroots {

namespace {

// (b - a) x (c - a); > 0 for a counter-clockwise turn.
__int128 cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
           static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

}  // namespace

NewtonPolygon lower_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    NewtonPolygon np;
    np.support = points;

    std::vector<LatticePoint>& hull = np.lower_vertices;
    for (const auto& pt : points) {
        // only the lowest point of each abscissa can be on a lower edge
        if (!hull.empty() && hull.back().x == pt.x) continue;
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    return np;
}

NewtonPolygon newton_polygon(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Newton polygon of the zero polynomial");
    std::vector<LatticePoint> pts;
    pts.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) pts.push_back({e, f.field().int_valuation(c)});
    return lower_hull(std::move(pts));
}

std::vector<LowerEdge> lower_edges(const NewtonPolygon& polygon) {
    std::vector<LowerEdge> edges;
    const auto& v = polygon.lower_vertices;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        LowerEdge e;
        e.left = v[i];
        e.right = v[i + 1];
        e.length = e.right.x - e.left.x;
        e.slope = mpq_class(mpz_class(static_cast<long>(e.right.y - e.left.y)),
                            mpz_class(static_cast<long>(e.length)));
        e.slope.canonicalize();
        for (const auto& pt : polygon.support) {
            if (pt.x < e.left.x || pt.x > e.right.x) continue;
            if (cross(e.left, e.right, pt) == 0) e.support_on_edge.push_back(pt);
        }
        edges.push_back(std::move(e));
    }
    return edges;
}

EdgeRootData edge_root_data(const LowerEdge& edge) {
    return {edge.length, mpq_class(-edge.slope)};
}

}  // namespace localroots
