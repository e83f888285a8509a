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

#ifndef CURVETEXT_TOOLS_RASTER_IO_HPP
#define CURVETEXT_TOOLS_RASTER_IO_HPP

#include <curvetext/errors.hpp>
#include <curvetext/image.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace curvetext::tools {

/// File-system or codec failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// A decoded raster with samples in [0, maxValue].
struct Raster {
    ImageBuffer image;
    int maxValue = 255;
};

/// Decodes binary or ASCII PGM/PPM (P2, P3, P5, P6) and PNG, detected from
/// the leading bytes. Throws IoError.
Raster decodeRaster(const std::vector<std::uint8_t>& bytes);
Raster readRaster(const std::filesystem::path& path);

/// Binary PGM (1 channel) or PPM (3 channels). Samples are rounded to the
/// nearest integer and clamped to [0, maxValue]; maxValue > 255 writes 16-bit.
std::vector<std::uint8_t> encodePnm(const ImageBuffer& image, int maxValue = 255);

/// 8-bit (maxValue <= 255) or 16-bit PNG with 1 to 4 channels.
std::vector<std::uint8_t> encodePng(const ImageBuffer& image, int maxValue = 255);

/// Picks the codec from the extension: .pgm/.ppm/.pnm or .png.
void writeRaster(const std::filesystem::path& path, const ImageBuffer& image, int maxValue = 255);

std::vector<std::uint8_t> readFileBytes(const std::filesystem::path& path);
std::string readTextFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, std::string_view content);

} // namespace curvetext::tools

#endif // CURVETEXT_TOOLS_RASTER_IO_HPP
