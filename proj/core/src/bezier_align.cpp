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

#include <curvetext/bezier_align.hpp>

#include <curvetext/errors.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <utility>

namespace curvetext {

namespace {

void checkIndex(const char* what, std::size_t index, std::size_t size) {
    if (size == 0) {
        throw InvalidArgument(std::string(what) + " count must be positive");
    }
    if (index >= size) {
        throw InvalidArgument(
            std::string(what) + " index " + std::to_string(index) + " is outside [0, "
            + std::to_string(size) + ")");
    }
}

double indexFraction(std::size_t index, std::size_t size, SamplingConvention convention) {
    const auto g = static_cast<double>(index);
    const auto n = static_cast<double>(size);
    switch (convention) {
    case SamplingConvention::Paper:
        return g / n;
    case SamplingConvention::PixelCenter:
        return (g + 0.5) / n;
    case SamplingConvention::Endpoint:
        return size == 1 ? 0.0 : g / (n - 1.0);
    }
    throw InvalidArgument("unknown sampling convention");
}

} // namespace

double columnParam(std::size_t column, std::size_t width, SamplingConvention convention) {
    checkIndex("column", column, width);
    return indexFraction(column, width, convention);
}

double rowFraction(std::size_t row, std::size_t height, SamplingConvention convention) {
    checkIndex("row", row, height);
    return indexFraction(row, height, convention);
}

Point2 samplePoint(
    Point2 tp,
    Point2 bp,
    std::size_t row,
    std::size_t height,
    SamplingConvention convention) {
    const double f = rowFraction(row, height, convention);
    return {bp.x * f + tp.x * (1.0 - f), bp.y * f + tp.y * (1.0 - f)};
}

SampleGrid::SampleGrid(GridSize size, std::vector<Point2> coords, bool degenerate)
    : size_(size), coords_(std::move(coords)), degenerate_(degenerate) {
    if (size.height == 0 || size.width == 0) {
        throw InvalidArgument("sample grid dimensions must be positive");
    }
    if (coords_.size() != size.height * size.width) {
        throw InvalidArgument("sample grid coordinate count does not match its size");
    }
}

SampleGrid buildGrid(const BezierTextRegion& region, GridSize size, SamplingConvention convention) {
    if (size.height == 0 || size.width == 0) {
        throw InvalidArgument(
            "output size must be positive, got " + std::to_string(size.height) + "x"
            + std::to_string(size.width));
    }
    std::vector<Point2> coords(size.height * size.width);
    for (std::size_t col = 0; col < size.width; ++col) {
        const double t = columnParam(col, size.width, convention);
        const Point2 tp = region.top.evaluate(t);
        const Point2 bp = region.bottom.evaluate(t);
        for (std::size_t row = 0; row < size.height; ++row) {
            coords[row * size.width + col] = samplePoint(tp, bp, row, size.height, convention);
        }
    }
    return SampleGrid(size, std::move(coords), region.top == region.bottom);
}

void bilinearSample(const ImageBuffer& image, Point2 p, std::span<double> out) {
    const std::size_t channels = image.channels();
    if (out.size() != channels) {
        throw InvalidArgument("output span does not match the image channel count");
    }
    if (!isFinite(p)) {
        throw InvalidArgument("sampling coordinate is not finite");
    }
    const double maxX = static_cast<double>(image.width() - 1);
    const double maxY = static_cast<double>(image.height() - 1);
    const double x = std::clamp(p.x, 0.0, maxX);
    const double y = std::clamp(p.y, 0.0, maxY);

    const auto x0 = static_cast<std::size_t>(x);
    const auto y0 = static_cast<std::size_t>(y);
    const std::size_t x1 = std::min(x0 + 1, image.width() - 1);
    const std::size_t y1 = std::min(y0 + 1, image.height() - 1);
    const double fx = x - static_cast<double>(x0);
    const double fy = y - static_cast<double>(y0);

    for (std::size_t c = 0; c < channels; ++c) {
        const double top = (1.0 - fx) * image.at(x0, y0, c) + fx * image.at(x1, y0, c);
        const double bottom = (1.0 - fx) * image.at(x0, y1, c) + fx * image.at(x1, y1, c);
        out[c] = (1.0 - fy) * top + fy * bottom;
    }
}

std::vector<double> bilinearSample(const ImageBuffer& image, Point2 p) {
    std::vector<double> out(image.channels());
    bilinearSample(image, p, out);
    return out;
}

ImageBuffer warpRegion(
    const ImageBuffer& image,
    const BezierTextRegion& region,
    GridSize size,
    SamplingConvention convention) {
    const SampleGrid grid = buildGrid(region, size, convention);
    const std::size_t channels = image.channels();
    ImageBuffer out(size.width, size.height, channels);
    std::span<double> data = out.data();
    for (std::size_t i = 0; i < grid.coords().size(); ++i) {
        bilinearSample(image, grid.coords()[i], data.subspan(i * channels, channels));
    }
    return out;
}

std::vector<WarpResult> warpBatch(
    const ImageBuffer& image,
    std::span<const BezierTextRegion> regions,
    const WarpOptions& options) {
    if (options.size.height == 0 || options.size.width == 0) {
        throw InvalidArgument("output size must be positive");
    }
    std::vector<WarpResult> results(regions.size());
    const auto work = [&](std::size_t i) {
        try {
            results[i].image = warpRegion(image, regions[i], options.size, options.convention);
        }
        catch (const std::exception& e) {
            results[i].error = e.what();
        }
    };

    std::size_t threads = options.threads;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, regions.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < regions.size(); ++i) {
            work(i);
        }
        return results;
    }

    // Each slot is written by exactly one worker.
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < regions.size(); i += threads) {
                work(i);
            }
        });
    }
    workers.clear();
    return results;
}

} // namespace curvetext
