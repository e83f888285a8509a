// Copyright 2026 The Curvetext Authors
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

#include <curvetext/bezier.hpp>

#include <curvetext/errors.hpp>

#include <string>

namespace curvetext {

namespace {

void checkParam(double t) {
    // Written so that NaN fails too.
    if (!(t >= 0.0 && t <= 1.0)) {
        throw InvalidArgument("curve parameter t=" + std::to_string(t) + " is outside [0, 1]");
    }
}

} // namespace

std::array<double, 4> bernsteinBasis(double t) {
    checkParam(t);
    const double s = 1.0 - t;
    return {s * s * s, 3.0 * t * s * s, 3.0 * t * t * s, t * t * t};
}

CubicBezier::CubicBezier(const std::array<Point2, 4>& controls)
    : controls_(controls) {
    for (const Point2& p : controls_) {
        if (!isFinite(p)) {
            throw InvalidArgument("cubic Bezier control point is not finite");
        }
    }
}

CubicBezier CubicBezier::line(Point2 a, Point2 b) {
    return CubicBezier(a, lerp(a, b, 1.0 / 3.0), lerp(a, b, 2.0 / 3.0), b);
}

Point2 CubicBezier::evaluate(double t) const {
    const auto basis = bernsteinBasis(t);
    Point2 p;
    for (std::size_t i = 0; i < 4; ++i) {
        p.x += basis[i] * controls_[i].x;
        p.y += basis[i] * controls_[i].y;
    }
    return p;
}

Point2 CubicBezier::deCasteljau(double t) const {
    checkParam(t);
    std::array<Point2, 4> q = controls_;
    for (std::size_t level = 3; level > 0; --level) {
        for (std::size_t i = 0; i < level; ++i) {
            q[i] = lerp(q[i], q[i + 1], t);
        }
    }
    return q[0];
}

std::vector<Point2> CubicBezier::sample(std::size_t k) const {
    if (k < 2) {
        throw InvalidArgument("polyline sampling needs at least 2 points, got " + std::to_string(k));
    }
    std::vector<Point2> out;
    out.reserve(k);
    const double denom = static_cast<double>(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
        // i == k - 1 gives exactly 1.
        out.push_back(evaluate(static_cast<double>(i) / denom));
    }
    return out;
}

} // namespace curvetext
