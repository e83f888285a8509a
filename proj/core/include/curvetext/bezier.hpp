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

#ifndef CURVETEXT_BEZIER_HPP
#define CURVETEXT_BEZIER_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace curvetext {

/// A 2-D point in pixel units. Plain value; finiteness is checked by the
/// types that own points (CubicBezier, PolylineBoundary, ...).
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

inline bool isFinite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double distance(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

/// Linear interpolation `(1 - s) * a + s * b`.
inline Point2 lerp(Point2 a, Point2 b, double s) {
    return {(1.0 - s) * a.x + s * b.x, (1.0 - s) * a.y + s * b.y};
}

/// Cubic Bernstein basis (B_{0,3}(t), ..., B_{3,3}(t)).
///
/// Throws InvalidArgument if t is not in [0, 1] (NaN included).
std::array<double, 4> bernsteinBasis(double t);

/// A cubic Bezier curve given by its control points b_0..b_3.
///
/// The curve starts at b_0 (t = 0) and ends at b_3 (t = 1). Instances are
/// immutable and always hold finite coordinates.
class CubicBezier {
public:
    /// Throws InvalidArgument if any coordinate is not finite.
    explicit CubicBezier(const std::array<Point2, 4>& controls);
    CubicBezier(Point2 b0, Point2 b1, Point2 b2, Point2 b3)
        : CubicBezier(std::array<Point2, 4>{b0, b1, b2, b3}) {}

    /// The straight segment from `a` to `b`, with interior control points at
    /// its tripartite points.
    static CubicBezier line(Point2 a, Point2 b);

    const std::array<Point2, 4>& controls() const { return controls_; }
    Point2 operator[](std::size_t i) const { return controls_[i]; }
    Point2 front() const { return controls_[0]; }
    Point2 back() const { return controls_[3]; }

    /// Sum of the control points weighted by the Bernstein basis at t.
    Point2 evaluate(double t) const;

    /// Same point as evaluate(), computed by repeated linear interpolation.
    Point2 deCasteljau(double t) const;

    /// The k points evaluate(i / (k - 1)), i = 0..k-1. Requires k >= 2.
    std::vector<Point2> sample(std::size_t k) const;

    friend bool operator==(const CubicBezier&, const CubicBezier&) = default;

private:
    std::array<Point2, 4> controls_;
};

} // namespace curvetext

#endif // CURVETEXT_BEZIER_HPP
