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

#include "localroots/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace localroots {

namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 48;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string newton_svg(const NewtonPolygon& polygon) {
    std::int64_t x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!polygon.support.empty()) {
        x0 = x1 = polygon.support.front().x;
        y0 = y1 = polygon.support.front().y;
        for (const auto& pt : polygon.support) {
            x0 = std::min(x0, pt.x);
            x1 = std::max(x1, pt.x);
            y0 = std::min(y0, pt.y);
            y1 = std::max(y1, pt.y);
        }
        x0 = std::min<std::int64_t>(x0, 0);
        if (x1 == x0) ++x1;
        if (y1 == y0) ++y1;
    }
    const double sx = (kWidth - 2 * kMargin) / static_cast<double>(x1 - x0);
    const double sy = (kHeight - 2 * kMargin) / static_cast<double>(y1 - y0);
    auto px = [&](double x) { return kMargin + (x - static_cast<double>(x0)) * sx; };
    auto py = [&](double y) { return kHeight - kMargin - (y - static_cast<double>(y0)) * sy; };
    // keep at most ~40 grid lines per axis
    const std::int64_t step_x = std::max<std::int64_t>(1, (x1 - x0) / 40 + 1);
    const std::int64_t step_y = std::max<std::int64_t>(1, (y1 - y0) / 40 + 1);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"480\" "
          "viewBox=\"0 0 640 480\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n"
       << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (std::int64_t x = x0; x <= x1; x += step_x)
        os << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(py(y0)) << "\" x2=\"" << num(px(x))
           << "\" y2=\"" << num(py(y1)) << "\"/>\n";
    for (std::int64_t y = y0; y <= y1; y += step_y)
        os << "<line x1=\"" << num(px(x0)) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(px(x1))
           << "\" y2=\"" << num(py(y)) << "\"/>\n";
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#555555\">\n";
    for (std::int64_t x = x0; x <= x1; x += step_x)
        os << "<text x=\"" << num(px(x)) << "\" y=\"" << num(py(y0) + 16)
           << "\" text-anchor=\"middle\">" << x << "</text>\n";
    for (std::int64_t y = y0; y <= y1; y += step_y)
        os << "<text x=\"" << num(px(x0) - 8) << "\" y=\"" << num(py(y) + 4)
           << "\" text-anchor=\"end\">" << y << "</text>\n";
    os << "</g>\n";

    if (polygon.lower_vertices.size() >= 2) {
        os << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2.5\" points=\"";
        for (std::size_t i = 0; i < polygon.lower_vertices.size(); ++i) {
            const auto& v = polygon.lower_vertices[i];
            os << (i ? " " : "") << num(px(v.x)) << ',' << num(py(v.y));
        }
        os << "\"/>\n<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#d62728\">\n";
        for (const auto& e : lower_edges(polygon)) {
            const double mx = px((e.left.x + e.right.x) / 2.0);
            const double my = py((e.left.y + e.right.y) / 2.0);
            os << "<text x=\"" << num(mx + 6) << "\" y=\"" << num(my + 16) << "\">" << e.slope.get_str()
               << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "<g fill=\"#1f2937\">\n";
    for (const auto& pt : polygon.support)
        os << "<circle cx=\"" << num(px(pt.x)) << "\" cy=\"" << num(py(pt.y)) << "\" r=\"4\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace localroots
