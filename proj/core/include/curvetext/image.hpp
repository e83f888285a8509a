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

#ifndef CURVETEXT_IMAGE_HPP
#define CURVETEXT_IMAGE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace curvetext {

/// Row-major interleaved raster of double samples.
///
/// Sample (x, y, c) is stored at ((y * width) + x) * channels + c. Pixel
/// (row i, column j) sits at continuous coordinate (j, i).
class ImageBuffer {
public:
    /// Filled with `fill`. Throws InvalidArgument on zero dimensions.
    ImageBuffer(std::size_t width, std::size_t height, std::size_t channels, double fill = 0.0);

    /// Throws InvalidArgument on zero dimensions, a size mismatch, or
    /// non-finite samples.
    ImageBuffer(std::size_t width, std::size_t height, std::size_t channels, std::vector<double> data);

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t channels() const { return channels_; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    double at(std::size_t x, std::size_t y, std::size_t c = 0) const {
        return data_[(y * width_ + x) * channels_ + c];
    }
    double& at(std::size_t x, std::size_t y, std::size_t c = 0) {
        return data_[(y * width_ + x) * channels_ + c];
    }

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::size_t channels_;
    std::vector<double> data_;
};

} // namespace curvetext

#endif // CURVETEXT_IMAGE_HPP
