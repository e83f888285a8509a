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

#ifndef CURVETEXT_CURVE_FIT_HPP
#define CURVETEXT_CURVE_FIT_HPP

#include <curvetext/bezier.hpp>
#include <curvetext/region.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvetext {

/// Ordered annotation points along one long side of a text instance.
///
/// Construction normalizes the input: consecutive duplicate points are merged.
/// Throws InvalidArgument on non-finite coordinates or fewer than 2 input
/// points, and DegenerateGeometry if fewer than 2 distinct points remain.
class PolylineBoundary {
public:
    explicit PolylineBoundary(std::span<const Point2> points);
    PolylineBoundary(std::initializer_list<Point2> points)
        : PolylineBoundary(std::span<const Point2>(points.begin(), points.size())) {}

    const std::vector<Point2>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    Point2 front() const { return points_.front(); }
    Point2 back() const { return points_.back(); }

    /// Sum of segment lengths.
    double length() const;

private:
    std::vector<Point2> points_;
};

/// Curve parameters assigned to boundary points: non-decreasing values in
/// [0, 1], first exactly 0 and last exactly 1.
class ChordParams {
public:
    /// Throws InvalidArgument if the invariants do not hold.
    explicit ChordParams(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
};

/// How the first and last control points are treated by the solver.
enum class EndpointMode {
    /// b_0 = p_0 and b_3 = p_m; only b_1, b_2 are solved for.
    Fixed,
    /// All four control points are least-squares unknowns (comparison only).
    Free,
};

struct FitOptions {
    EndpointMode endpoints = EndpointMode::Fixed;
    /// Systems whose 2-norm condition number exceeds this are rejected.
    double maxCondition = 1e10;
};

/// t_j = cumulative length up to p_j divided by the total polyline length.
ChordParams chordLengthParams(const PolylineBoundary& boundary);

/// Least-squares cubic through `boundary` at the given parameters.
///
/// With EndpointMode::Fixed the residual is minimal over every cubic sharing
/// the boundary's endpoints. Two-point boundaries give the straight segment
/// with tripartite interior controls. A three-point boundary under-determines
/// the two free controls; the minimum-norm departure from that straight
/// segment is returned.
///
/// Throws InvalidArgument on a size mismatch and ConditioningError when the
/// system is numerically rank deficient.
CubicBezier fitCubic(
    const PolylineBoundary& boundary,
    const ChordParams& params,
    const FitOptions& options = {});

/// fitCubic(boundary, chordLengthParams(boundary), options).
CubicBezier fitBoundary(const PolylineBoundary& boundary, const FitOptions& options = {});

/// Root-mean-square distance between curve(t_j) and p_j.
double fittingResidual(
    const PolylineBoundary& boundary,
    const CubicBezier& curve,
    const ChordParams& params);

/// Orientation of the second half of an annotation polygon.
enum class PolygonWinding {
    /// First half is the top side left to right, second half the bottom side
    /// right to left (Total-Text / CTW1500 convention).
    BottomReversed,
    /// Both halves are stored left to right.
    BottomForward,
};

struct PolygonOptions {
    PolygonWinding winding = PolygonWinding::BottomReversed;
    FitOptions fit;
};

/// The two sides of a 2k-point annotation polygon, both oriented left to
/// right. Throws InvalidArgument if the count is odd or below 4.
std::pair<PolylineBoundary, PolylineBoundary> splitPolygon(
    std::span<const Point2> polygon,
    PolygonWinding winding = PolygonWinding::BottomReversed);

/// Converts a polygon annotation into a Bezier text region by fitting each
/// side with fitBoundary().
BezierTextRegion polygonToRegion(
    std::span<const Point2> polygon,
    std::optional<std::string> transcription = std::nullopt,
    const PolygonOptions& options = {});

} // namespace curvetext

#endif // CURVETEXT_CURVE_FIT_HPP
