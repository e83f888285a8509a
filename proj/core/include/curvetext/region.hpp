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

#ifndef CURVETEXT_REGION_HPP
#define CURVETEXT_REGION_HPP

#include <curvetext/bezier.hpp>

#include <optional>
#include <string>

namespace curvetext {

/// One text instance bounded by a top and a bottom cubic Bezier curve.
///
/// Both curves run left to right: top.front() and bottom.front() are the left
/// end of the instance, top.back() and bottom.back() the right end.
struct BezierTextRegion {
    CubicBezier top;
    CubicBezier bottom;
    std::optional<std::string> transcription;

    friend bool operator==(const BezierTextRegion&, const BezierTextRegion&) = default;
};

} // namespace curvetext

#endif // CURVETEXT_REGION_HPP
