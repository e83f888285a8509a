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

#ifndef CURVETEXT_BEZIER_ALIGN_HPP
#define CURVETEXT_BEZIER_ALIGN_HPP

#include <curvetext/bezier.hpp>
#include <curvetext/image.hpp>
#include <curvetext/region.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvetext {

/// How output pixel indices map to curve parameter and row fraction.
enum class SamplingConvention {
    /// t = g / size. Neither t nor the row fraction reaches 1.
    Paper,
    /// t = (g + 0.5) / size.
    PixelCenter,
    /// t = g / (size - 1), so the last column/row lands on the curve end.
    Endpoint,
};

/// Output size of a rectified region.
struct GridSize {
    std::size_t height = 7;
    std::size_t width = 32;

    friend bool operator==(GridSize, GridSize) = default;
};

inline constexpr GridSize kDefaultGridSize{7, 32};

/// Curve parameter of output column `column` (0 <= column < width).
/// Throws InvalidArgument on an out-of-range column or zero width.
double columnParam(
    std::size_t column,
    std::size_t width,
    SamplingConvention convention = SamplingConvention::Paper);

/// Interpolation weight of the bottom curve for output row `row`.
double rowFraction(
    std::size_t row,
    std::size_t height,
    SamplingConvention convention = SamplingConvention::Paper);

/// bp * f + tp * (1 - f), with f = rowFraction(row, height, convention).
Point2 samplePoint(
    Point2 tp,
    Point2 bp,
    std::size_t row,
    std::size_t height,
    SamplingConvention convention = SamplingConvention::Paper);

/// Source-image coordinates of every output pixel of a rectified region.
class SampleGrid {
public:
    SampleGrid(GridSize size, std::vector<Point2> coords, bool degenerate);

    GridSize size() const { return size_; }
    std::size_t height() const { return size_.height; }
    std::size_t width() const { return size_.width; }

    Point2 at(std::size_t row, std::size_t column) const {
        return coords_[row * size_.width + column];
    }
    const std::vector<Point2>& coords() const { return coords_; }

    /// True when the top and bottom curves coincide, so every row samples
    /// the same curve.
    bool degenerate() const { return degenerate_; }

private:
    GridSize size_;
    std::vector<Point2> coords_;
    bool degenerate_;
};

SampleGrid buildGrid(
    const BezierTextRegion& region,
    GridSize size = kDefaultGridSize,
    SamplingConvention convention = SamplingConvention::Paper);

/// Bilinear interpolation of every channel at `p`, written to `out`
/// (size == image.channels()). Coordinates are clamped to
/// [0, width - 1] x [0, height - 1] first.
void bilinearSample(const ImageBuffer& image, Point2 p, std::span<double> out);

std::vector<double> bilinearSample(const ImageBuffer& image, Point2 p);

/// Rectifies `region` of `image` into a size.height x size.width raster.
ImageBuffer warpRegion(
    const ImageBuffer& image,
    const BezierTextRegion& region,
    GridSize size = kDefaultGridSize,
    SamplingConvention convention = SamplingConvention::Paper);

struct WarpOptions {
    GridSize size = kDefaultGridSize;
    SamplingConvention convention = SamplingConvention::Paper;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 1;
};

/// Outcome of one region of a batch.
struct WarpResult {
    std::optional<ImageBuffer> image;
    std::string error;

    bool ok() const { return image.has_value(); }
};

/// warpRegion() over every region. Results are in input order and identical
/// for every thread count; a failing region does not stop the batch.
std::vector<WarpResult> warpBatch(
    const ImageBuffer& image,
    std::span<const BezierTextRegion> regions,
    const WarpOptions& options = {});

} // namespace curvetext

#endif // CURVETEXT_BEZIER_ALIGN_HPP
