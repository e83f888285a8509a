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

#include <curvetext/curve_fit.hpp>

#include <curvetext/errors.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace curvetext {

PolylineBoundary::PolylineBoundary(std::span<const Point2> points) {
    if (points.size() < 2) {
        throw InvalidArgument(
            "a boundary needs at least 2 points, got " + std::to_string(points.size()));
    }
    points_.reserve(points.size());
    for (const Point2& p : points) {
        if (!isFinite(p)) {
            throw InvalidArgument("boundary point is not finite");
        }
        if (points_.empty() || points_.back() != p) {
            points_.push_back(p);
        }
    }
    if (points_.size() < 2) {
        throw DegenerateGeometry("all boundary points coincide");
    }
}

double PolylineBoundary::length() const {
    double total = 0.0;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        total += distance(points_[i - 1], points_[i]);
    }
    return total;
}

ChordParams::ChordParams(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw InvalidArgument("chord parameters need at least 2 values");
    }
    if (values_.front() != 0.0 || values_.back() != 1.0) {
        throw InvalidArgument("chord parameters must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (!(values_[i] >= values_[i - 1])) {
            throw InvalidArgument("chord parameters must be non-decreasing");
        }
    }
}

ChordParams chordLengthParams(const PolylineBoundary& boundary) {
    const auto& pts = boundary.points();
    std::vector<double> cumulative(pts.size(), 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        cumulative[i] = cumulative[i - 1] + distance(pts[i - 1], pts[i]);
    }
    const double total = cumulative.back();
    if (!(total > 0.0)) {
        throw DegenerateGeometry("boundary has zero length");
    }
    for (double& c : cumulative) {
        c /= total;
    }
    cumulative.front() = 0.0;
    cumulative.back() = 1.0;
    return ChordParams(std::move(cumulative));
}

namespace {

// Ratio of extreme singular values; infinity when rank deficient.
double conditionNumber(const Eigen::MatrixXd& a) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(s.size() - 1) == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return s(0) / s(s.size() - 1);
}

[[noreturn]] void throwIllConditioned(double cond, double limit) {
    throw ConditioningError(
        "least-squares system is rank deficient (condition estimate "
            + std::to_string(cond) + " exceeds " + std::to_string(limit) + ")",
        cond);
}

// b_0, b_3 pinned to the boundary ends. The unknowns are the offsets of b_1,
// b_2 from the tripartite points of the chord p_0 p_m; the chord cubic
// evaluates to lerp(p_0, p_m, t), so the right-hand side is p_j minus that.
CubicBezier fitFixedEndpoints(
    const std::vector<Point2>& pts,
    const ChordParams& params,
    double maxCondition) {
    const Point2 first = pts.front();
    const Point2 last = pts.back();
    const CubicBezier chord = CubicBezier::line(first, last);

    const std::size_t interior = pts.size() - 2;
    if (interior == 0) {
        return chord;
    }

    Eigen::MatrixXd a(interior, 2);
    Eigen::MatrixXd rhs(interior, 2);
    for (std::size_t j = 0; j < interior; ++j) {
        const double t = params[j + 1];
        const auto basis = bernsteinBasis(t);
        a(j, 0) = basis[1];
        a(j, 1) = basis[2];
        const Point2 onChord = lerp(first, last, t);
        rhs(j, 0) = pts[j + 1].x - onChord.x;
        rhs(j, 1) = pts[j + 1].y - onChord.y;
    }

    Eigen::MatrixXd offsets;
    if (interior == 1) {
        // One equation, two unknowns: take the minimum-norm solution.
        if (a.norm() == 0.0) {
            throwIllConditioned(std::numeric_limits<double>::infinity(), maxCondition);
        }
        offsets = a.completeOrthogonalDecomposition().solve(rhs);
    }
    else {
        const double cond = conditionNumber(a);
        if (!(cond <= maxCondition)) {
            throwIllConditioned(cond, maxCondition);
        }
        offsets = a.colPivHouseholderQr().solve(rhs);
    }

    return CubicBezier(
        first,
        chord[1] + Point2{offsets(0, 0), offsets(0, 1)},
        chord[2] + Point2{offsets(1, 0), offsets(1, 1)},
        last);
}

CubicBezier fitFreeEndpoints(
    const std::vector<Point2>& pts,
    const ChordParams& params,
    double maxCondition) {
    if (pts.size() == 2) {
        return CubicBezier::line(pts.front(), pts.back());
    }
    const auto rows = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd a(rows, 4);
    Eigen::MatrixXd rhs(rows, 2);
    for (Eigen::Index j = 0; j < rows; ++j) {
        const auto basis = bernsteinBasis(params[static_cast<std::size_t>(j)]);
        for (Eigen::Index i = 0; i < 4; ++i) {
            a(j, i) = basis[static_cast<std::size_t>(i)];
        }
        rhs(j, 0) = pts[static_cast<std::size_t>(j)].x;
        rhs(j, 1) = pts[static_cast<std::size_t>(j)].y;
    }
    const double cond = rows < 4 ? std::numeric_limits<double>::infinity() : conditionNumber(a);
    if (!(cond <= maxCondition)) {
        throwIllConditioned(cond, maxCondition);
    }
    const Eigen::MatrixXd b = a.colPivHouseholderQr().solve(rhs);
    return CubicBezier(
        Point2{b(0, 0), b(0, 1)},
        Point2{b(1, 0), b(1, 1)},
        Point2{b(2, 0), b(2, 1)},
        Point2{b(3, 0), b(3, 1)});
}

} // namespace

CubicBezier fitCubic(
    const PolylineBoundary& boundary,
    const ChordParams& params,
    const FitOptions& options) {
    if (params.size() != boundary.size()) {
        throw InvalidArgument(
            "boundary has " + std::to_string(boundary.size()) + " points but "
            + std::to_string(params.size()) + " parameters were given");
    }
    switch (options.endpoints) {
    case EndpointMode::Fixed:
        return fitFixedEndpoints(boundary.points(), params, options.maxCondition);
    case EndpointMode::Free:
        return fitFreeEndpoints(boundary.points(), params, options.maxCondition);
    }
    throw InvalidArgument("unknown endpoint mode");
}

CubicBezier fitBoundary(const PolylineBoundary& boundary, const FitOptions& options) {
    return fitCubic(boundary, chordLengthParams(boundary), options);
}

double fittingResidual(
    const PolylineBoundary& boundary,
    const CubicBezier& curve,
    const ChordParams& params) {
    if (params.size() != boundary.size()) {
        throw InvalidArgument("boundary and parameter counts differ");
    }
    const auto& pts = boundary.points();
    double sum = 0.0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        const Point2 d = curve.evaluate(params[j]) - pts[j];
        sum += d.x * d.x + d.y * d.y;
    }
    return std::sqrt(sum / static_cast<double>(pts.size()));
}

std::pair<PolylineBoundary, PolylineBoundary> splitPolygon(
    std::span<const Point2> polygon,
    PolygonWinding winding) {
    if (polygon.size() < 4 || polygon.size() % 2 != 0) {
        throw InvalidArgument(
            "a text polygon needs an even number (>= 4) of points, got "
            + std::to_string(polygon.size()));
    }
    const std::size_t half = polygon.size() / 2;
    std::vector<Point2> bottom(polygon.begin() + static_cast<std::ptrdiff_t>(half), polygon.end());
    if (winding == PolygonWinding::BottomReversed) {
        std::reverse(bottom.begin(), bottom.end());
    }
    return {PolylineBoundary(polygon.first(half)), PolylineBoundary(bottom)};
}

BezierTextRegion polygonToRegion(
    std::span<const Point2> polygon,
    std::optional<std::string> transcription,
    const PolygonOptions& options) {
    const auto [top, bottom] = splitPolygon(polygon, options.winding);
    return BezierTextRegion{
        fitBoundary(top, options.fit),
        fitBoundary(bottom, options.fit),
        std::move(transcription)};
}

} // namespace curvetext
