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

#include "raster_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>

namespace curvetext::tools {

namespace {

class PnmReader {
public:
    explicit PnmReader(const std::vector<std::uint8_t>& bytes)
        : bytes_(bytes) {}

    // Next whitespace-separated header token, skipping '#' comments.
    int headerInt() {
        skipSpaceAndComments();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
            throw IoError("malformed PNM header");
        }
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_++] - '0');
            if (value > (1L << 30)) {
                throw IoError("PNM header value out of range");
            }
        }
        return static_cast<int>(value);
    }

    // The single whitespace byte that ends a binary header.
    void endOfHeader() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw IoError("malformed PNM header");
        }
        ++pos_;
    }

    int binarySample(bool wide) {
        const std::size_t need = wide ? 2 : 1;
        if (pos_ + need > bytes_.size()) {
            throw IoError("truncated PNM pixel data");
        }
        int v = bytes_[pos_++];
        if (wide) {
            v = (v << 8) | bytes_[pos_++];
        }
        return v;
    }

    void skip(std::size_t n) { pos_ += n; }

private:
    void skipSpaceAndComments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            }
            else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            }
            else {
                break;
            }
        }
    }

    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

Raster decodePnm(const std::vector<std::uint8_t>& bytes) {
    const char kind = static_cast<char>(bytes[1]);
    const bool ascii = kind == '2' || kind == '3';
    const std::size_t channels = (kind == '3' || kind == '6') ? 3 : 1;

    PnmReader reader(bytes);
    reader.skip(2);
    const int width = reader.headerInt();
    const int height = reader.headerInt();
    const int maxValue = reader.headerInt();
    if (width <= 0 || height <= 0 || maxValue <= 0 || maxValue > 65535) {
        throw IoError("unsupported PNM dimensions or maximum value");
    }
    if (!ascii) {
        reader.endOfHeader();
    }

    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * channels;
    std::vector<double> data(count);
    for (double& v : data) {
        const int sample = ascii ? reader.headerInt() : reader.binarySample(maxValue > 255);
        if (sample > maxValue) {
            throw IoError("PNM sample exceeds the declared maximum value");
        }
        v = sample;
    }
    return Raster{
        ImageBuffer(static_cast<std::size_t>(width), static_cast<std::size_t>(height), channels, std::move(data)),
        maxValue};
}

Raster decodePng(const std::vector<std::uint8_t>& bytes) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
        throw IoError(std::string("cannot decode PNG: ") + image.message);
    }
    image.format &= (PNG_FORMAT_FLAG_COLOR | PNG_FORMAT_FLAG_ALPHA);
    const std::size_t channels = PNG_IMAGE_SAMPLE_CHANNELS(image.format);
    std::vector<png_byte> pixels(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
        png_image_free(&image);
        throw IoError(std::string("cannot decode PNG: ") + image.message);
    }
    std::vector<double> data(pixels.begin(), pixels.end());
    return Raster{ImageBuffer(image.width, image.height, channels, std::move(data)), 255};
}

int quantize(double v, int maxValue) {
    return static_cast<int>(std::lround(std::clamp(v, 0.0, static_cast<double>(maxValue))));
}

std::string lowerExtension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext;
}

} // namespace

Raster decodeRaster(const std::vector<std::uint8_t>& bytes) {
    static constexpr std::uint8_t pngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
    if (bytes.size() >= 8 && std::equal(pngSignature, pngSignature + 8, bytes.begin())) {
        return decodePng(bytes);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '3' || bytes[1] == '5' || bytes[1] == '6')) {
        return decodePnm(bytes);
    }
    throw IoError("unrecognized image format (expected PGM, PPM or PNG)");
}

Raster readRaster(const std::filesystem::path& path) {
    try {
        return decodeRaster(readFileBytes(path));
    }
    catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> encodePnm(const ImageBuffer& image, int maxValue) {
    if (image.channels() != 1 && image.channels() != 3) {
        throw IoError("PNM output needs 1 or 3 channels, got " + std::to_string(image.channels()));
    }
    if (maxValue <= 0 || maxValue > 65535) {
        throw IoError("PNM maximum value must be in [1, 65535]");
    }
    const std::string header = std::string(image.channels() == 1 ? "P5" : "P6") + "\n"
        + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n"
        + std::to_string(maxValue) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    const bool wide = maxValue > 255;
    out.reserve(out.size() + image.data().size() * (wide ? 2 : 1));
    for (double v : image.data()) {
        const int q = quantize(v, maxValue);
        if (wide) {
            out.push_back(static_cast<std::uint8_t>(q >> 8));
        }
        out.push_back(static_cast<std::uint8_t>(q & 0xFF));
    }
    return out;
}

std::vector<std::uint8_t> encodePng(const ImageBuffer& image, int maxValue) {
    if (image.channels() > 4) {
        throw IoError("PNG output supports at most 4 channels");
    }
    if (maxValue != 255) {
        throw IoError("PNG output is 8-bit only; use PGM/PPM for other sample ranges");
    }
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width());
    png.height = static_cast<png_uint_32>(image.height());
    switch (image.channels()) {
    case 1: png.format = PNG_FORMAT_GRAY; break;
    case 2: png.format = PNG_FORMAT_GA; break;
    case 3: png.format = PNG_FORMAT_RGB; break;
    default: png.format = PNG_FORMAT_RGBA; break;
    }
    std::vector<png_byte> pixels;
    pixels.reserve(image.data().size());
    for (double v : image.data()) {
        pixels.push_back(static_cast<png_byte>(quantize(v, 255)));
    }
    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&png, nullptr, &size, 0, pixels.data(), 0, nullptr)) {
        throw IoError(std::string("cannot encode PNG: ") + png.message);
    }
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&png, out.data(), &size, 0, pixels.data(), 0, nullptr)) {
        throw IoError(std::string("cannot encode PNG: ") + png.message);
    }
    out.resize(size);
    return out;
}

void writeRaster(const std::filesystem::path& path, const ImageBuffer& image, int maxValue) {
    const std::string ext = lowerExtension(path);
    std::vector<std::uint8_t> bytes;
    if (ext == ".png") {
        bytes = encodePng(image, maxValue);
    }
    else if (ext == ".pgm" || ext == ".ppm" || ext == ".pnm") {
        bytes = encodePnm(image, maxValue);
    }
    else {
        throw IoError(path.string() + ": unsupported output image extension");
    }
    writeFile(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::vector<std::uint8_t> readFileBytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(path.string() + ": cannot open for reading");
    }
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string readTextFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(path.string() + ": cannot open for reading");
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void writeFile(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError(path.string() + ": cannot open for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw IoError(path.string() + ": write failed");
    }
}

} // namespace curvetext::tools
