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

#include <curvetext/image.hpp>

#include <curvetext/errors.hpp>

#include <cmath>
#include <string>
#include <utility>

namespace curvetext {

namespace {

void checkDimensions(std::size_t width, std::size_t height, std::size_t channels) {
    if (width == 0 || height == 0 || channels == 0) {
        throw InvalidArgument(
            "image dimensions must be positive, got " + std::to_string(width) + "x"
            + std::to_string(height) + "x" + std::to_string(channels));
    }
}

} // namespace

ImageBuffer::ImageBuffer(std::size_t width, std::size_t height, std::size_t channels, double fill)
    : width_(width), height_(height), channels_(channels) {
    checkDimensions(width, height, channels);
    if (!std::isfinite(fill)) {
        throw InvalidArgument("image fill value is not finite");
    }
    data_.assign(width * height * channels, fill);
}

ImageBuffer::ImageBuffer(
    std::size_t width,
    std::size_t height,
    std::size_t channels,
    std::vector<double> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
    checkDimensions(width, height, channels);
    if (data_.size() != width * height * channels) {
        throw InvalidArgument(
            "image data has " + std::to_string(data_.size()) + " samples, expected "
            + std::to_string(width * height * channels));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw InvalidArgument("image sample is not finite");
        }
    }
}

} // namespace curvetext
