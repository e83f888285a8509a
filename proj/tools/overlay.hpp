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

#ifndef CURVETEXT_TOOLS_OVERLAY_HPP
#define CURVETEXT_TOOLS_OVERLAY_HPP

#include <curvetext/annotation_io.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace curvetext::tools {

/// Points per curve polyline in overlays.
inline constexpr std::size_t kDefaultCurveSamples = 64;

struct OverlayStyle {
    std::size_t curveSamples = kDefaultCurveSamples;
    double pointRadius = 3.0;
    double strokeWidth = 2.0;
};

/// SVG drawing `gt` over a background image of the given size. For every
/// instance: two `bezier-curve` polylines, two dashed `control-polygon`
/// polylines and eight `control-point` circles. `imageHref` may be empty
/// (no background) or any URI, typically a data URI.
std::string renderOverlaySvg(
    const BezierGtFile& gt,
    std::size_t width,
    std::size_t height,
    std::string_view imageHref,
    const OverlayStyle& style = {});

std::string base64Encode(std::span<const std::uint8_t> bytes);

} // namespace curvetext::tools

#endif // CURVETEXT_TOOLS_OVERLAY_HPP
