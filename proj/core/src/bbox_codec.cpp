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

#include <curvetext/bbox_codec.hpp>

#include <curvetext/errors.hpp>

#include <algorithm>
#include <cmath>

namespace curvetext {

RegionChannels toChannels(const BezierTextRegion& region) {
    RegionChannels out{};
    std::size_t k = 0;
    for (const CubicBezier* curve : {&region.top, &region.bottom}) {
        for (const Point2& p : curve->controls()) {
            out[k++] = p.x;
            out[k++] = p.y;
        }
    }
    return out;
}

BezierTextRegion fromChannels(
    const RegionChannels& channels,
    std::optional<std::string> transcription) {
    for (double v : channels) {
        if (!std::isfinite(v)) {
            throw InvalidArgument("region channel value is not finite");
        }
    }
    const auto point = [&](std::size_t i) { return Point2{channels[2 * i], channels[2 * i + 1]}; };
    return BezierTextRegion{
        CubicBezier(point(0), point(1), point(2), point(3)),
        CubicBezier(point(4), point(5), point(6), point(7)),
        std::move(transcription)};
}

std::array<Point2, 4> anchorVertexes(const BezierTextRegion& region, AnchorSource source) {
    if (source == AnchorSource::CornerVertexes) {
        return {region.top.front(), region.top.back(), region.bottom.back(), region.bottom.front()};
    }
    Point2 lo = region.top.front();
    Point2 hi = lo;
    for (const CubicBezier* curve : {&region.top, &region.bottom}) {
        for (const Point2& p : curve->controls()) {
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
        }
    }
    return {lo, Point2{hi.x, lo.y}, hi, Point2{lo.x, hi.y}};
}

OffsetTarget encodeOffsets(const BezierTextRegion& region, std::span<const Point2, 4> vertexes) {
    for (const Point2& v : vertexes) {
        if (!isFinite(v)) {
            throw InvalidArgument("anchor vertex is not finite");
        }
    }
    OffsetTarget target;
    target.anchor = vertexes[0];
    for (const Point2& v : vertexes) {
        target.anchor.x = std::min(target.anchor.x, v.x);
        target.anchor.y = std::min(target.anchor.y, v.y);
    }
    const RegionChannels channels = toChannels(region);
    for (std::size_t i = 0; i < kRegionChannels; i += 2) {
        target.deltas[i] = channels[i] - target.anchor.x;
        target.deltas[i + 1] = channels[i + 1] - target.anchor.y;
    }
    return target;
}

OffsetTarget encodeOffsets(const BezierTextRegion& region, AnchorSource source) {
    const auto vertexes = anchorVertexes(region, source);
    return encodeOffsets(region, std::span<const Point2, 4>(vertexes));
}

BezierTextRegion decodeOffsets(const OffsetTarget& target, std::optional<std::string> transcription) {
    if (!isFinite(target.anchor)) {
        throw InvalidArgument("offset anchor is not finite");
    }
    RegionChannels channels{};
    for (std::size_t i = 0; i < kRegionChannels; i += 2) {
        channels[i] = target.anchor.x + target.deltas[i];
        channels[i + 1] = target.anchor.y + target.deltas[i + 1];
    }
    return fromChannels(channels, std::move(transcription));
}

} // namespace curvetext
