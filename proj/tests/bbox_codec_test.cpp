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

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace curvetext;
using curvetext::oracle::Rng;

namespace {

BezierTextRegion sampleRegion() {
    return {CubicBezier({10, 20}, {30, 10}, {60, 12}, {90, 25}),
            CubicBezier({12, 50}, {32, 40}, {58, 44}, {88, 60}),
            std::nullopt};
}

} // namespace

TEST(Channels, LayoutIsTopThenBottomXBeforeY) {
    const RegionChannels ch = toChannels(sampleRegion());
    EXPECT_EQ(ch, (RegionChannels{10, 20, 30, 10, 60, 12, 90, 25, 12, 50, 32, 40, 58, 44, 88, 60}));
    EXPECT_EQ(fromChannels(ch), sampleRegion());
    RegionChannels bad = ch;
    bad[5] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(fromChannels(bad), InvalidArgument);
}

TEST(EncodeOffsets, DirectSubtraction) {
    const BezierTextRegion region = sampleRegion();
    const std::array<Point2, 4> vertexes{Point2{5, 8}, Point2{90, 9}, Point2{88, 60}, Point2{12, 50}};
    const OffsetTarget target = encodeOffsets(region, std::span<const Point2, 4>(vertexes));
    EXPECT_EQ(target.anchor, (Point2{5, 8}));
    // Control point (10, 20) against anchor (5, 8).
    EXPECT_EQ(target.deltas[0], 5.0);
    EXPECT_EQ(target.deltas[1], 12.0);
}

TEST(EncodeOffsets, CornerVertexAnchor) {
    const BezierTextRegion region = sampleRegion();
    const OffsetTarget target = encodeOffsets(region);
    // Corners: (10,20), (90,25), (88,60), (12,50).
    EXPECT_EQ(target.anchor, (Point2{10, 20}));
    EXPECT_EQ(target.deltas[0], 0.0);
    EXPECT_EQ(target.deltas[1], 0.0);
    // Interior control (30, 10) is above the anchor: negative offsets are fine.
    EXPECT_EQ(target.deltas[3], -10.0);
}

TEST(EncodeOffsets, ControlBoundsAnchor) {
    const OffsetTarget target = encodeOffsets(sampleRegion(), AnchorSource::ControlBounds);
    EXPECT_EQ(target.anchor, (Point2{10, 10}));
    const auto box = anchorVertexes(sampleRegion(), AnchorSource::ControlBounds);
    EXPECT_EQ(box[2], (Point2{90, 60}));
}

TEST(EncodeOffsets, RejectsNonFiniteVertex) {
    const std::array<Point2, 4> vertexes{Point2{std::nan(""), 0}, Point2{1, 0}, Point2{1, 1}, Point2{0, 1}};
    EXPECT_THROW(encodeOffsets(sampleRegion(), std::span<const Point2, 4>(vertexes)), InvalidArgument);
}

TEST(DecodeOffsets, ZeroDeltasCollapseToAnchor) {
    OffsetTarget target;
    target.anchor = {7, -3};
    const BezierTextRegion region = decodeOffsets(target);
    for (const CubicBezier* c : {&region.top, &region.bottom}) {
        for (const Point2& p : c->controls()) {
            EXPECT_EQ(p, (Point2{7, -3}));
        }
    }
}

TEST(DecodeOffsets, RejectsNonFinite) {
    OffsetTarget target;
    target.anchor = {std::numeric_limits<double>::infinity(), 0};
    EXPECT_THROW(decodeOffsets(target), InvalidArgument);
    target.anchor = {0, 0};
    target.deltas[3] = std::nan("");
    EXPECT_THROW(decodeOffsets(target), InvalidArgument);
}

TEST(Codec, RoundTrip) {
    Rng rng(21);
    for (int i = 0; i < 1000; ++i) {
        const BezierTextRegion region = rng.region(-200, 1200);
        for (AnchorSource source : {AnchorSource::CornerVertexes, AnchorSource::ControlBounds}) {
            const BezierTextRegion back = decodeOffsets(encodeOffsets(region, source));
            const RegionChannels a = toChannels(region);
            const RegionChannels b = toChannels(back);
            for (std::size_t k = 0; k < kRegionChannels; ++k) {
                EXPECT_NEAR(a[k], b[k], 1e-12);
            }
        }
    }
}

TEST(Codec, TranslationBehaviour) {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        const BezierTextRegion region = rng.region(0, 500);
        const Point2 shift{rng.integer(-100, 100) * 1.0, rng.integer(-100, 100) * 1.0};
        RegionChannels moved = toChannels(region);
        for (std::size_t k = 0; k < kRegionChannels; k += 2) {
            moved[k] += shift.x;
            moved[k + 1] += shift.y;
        }
        // Integer shifts on these magnitudes are exact, so deltas agree closely.
        const OffsetTarget a = encodeOffsets(region);
        const OffsetTarget b = encodeOffsets(fromChannels(moved));
        for (std::size_t k = 0; k < kRegionChannels; ++k) {
            EXPECT_NEAR(a.deltas[k], b.deltas[k], 1e-9);
        }

        OffsetTarget shifted = a;
        shifted.anchor = a.anchor + shift;
        const RegionChannels decoded = toChannels(decodeOffsets(a));
        const RegionChannels decodedShifted = toChannels(decodeOffsets(shifted));
        for (std::size_t k = 0; k < kRegionChannels; k += 2) {
            EXPECT_NEAR(decodedShifted[k] - decoded[k], shift.x, 1e-9);
            EXPECT_NEAR(decodedShifted[k + 1] - decoded[k + 1], shift.y, 1e-9);
        }
    }
}
