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

#ifndef CURVETEXT_BBOX_CODEC_HPP
#define CURVETEXT_BBOX_CODEC_HPP

#include <curvetext/bezier.hpp>
#include <curvetext/region.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

namespace curvetext {

/// Number of scalars describing a region.
inline constexpr std::size_t kRegionChannels = 16;

/// The fixed 16-scalar layout of a region: top b_0..b_3 then bottom b_0..b_3,
/// x before y for each control point.
using RegionChannels = std::array<double, kRegionChannels>;

RegionChannels toChannels(const BezierTextRegion& region);

/// Inverse of toChannels(). Throws InvalidArgument on non-finite values.
BezierTextRegion fromChannels(
    const RegionChannels& channels,
    std::optional<std::string> transcription = std::nullopt);

/// Regression target: per-control-point offsets from the anchor
/// (x_min, y_min), in RegionChannels order.
struct OffsetTarget {
    Point2 anchor;
    RegionChannels deltas{};
};

/// Which four vertexes define the anchor of a region.
enum class AnchorSource {
    /// The region corners: top.front(), top.back(), bottom.back(),
    /// bottom.front().
    CornerVertexes,
    /// The corners of the axis-aligned box around all 8 control points.
    ControlBounds,
};

std::array<Point2, 4> anchorVertexes(
    const BezierTextRegion& region,
    AnchorSource source = AnchorSource::CornerVertexes);

/// Offsets of every control point from (min x, min y) of `vertexes`.
/// Throws InvalidArgument if a vertex is not finite.
OffsetTarget encodeOffsets(
    const BezierTextRegion& region,
    std::span<const Point2, 4> vertexes);

OffsetTarget encodeOffsets(
    const BezierTextRegion& region,
    AnchorSource source = AnchorSource::CornerVertexes);

/// b_i = anchor + delta_i. Throws InvalidArgument on non-finite input.
BezierTextRegion decodeOffsets(
    const OffsetTarget& target,
    std::optional<std::string> transcription = std::nullopt);

} // namespace curvetext

#endif // CURVETEXT_BBOX_CODEC_HPP
