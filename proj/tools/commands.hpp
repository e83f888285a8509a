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

#ifndef CURVETEXT_TOOLS_COMMANDS_HPP
#define CURVETEXT_TOOLS_COMMANDS_HPP

#include <curvetext/annotation_io.hpp>
#include <curvetext/bezier_align.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curvetext::tools {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,      ///< bad command-line flags
    kExitParse = 2,      ///< malformed annotation or BezierGT input
    kExitIo = 3,         ///< file-system or image codec failure
    kExitValidation = 4, ///< inputs parse but are inconsistent or unconvertible
};

/// Parses "HxW", e.g. "7x32". Throws InvalidArgument.
GridSize parseGridSize(std::string_view text);
std::optional<SamplingConvention> conventionFromString(std::string_view name);

struct ConvertCommand {
    std::filesystem::path input;  ///< annotation file, or a directory of *.txt files
    std::filesystem::path output; ///< JSON file, or a directory
    PolygonDialect dialect = PolygonDialect::Generic;
    ConvertOptions options;
};

struct WarpCommand {
    std::filesystem::path image;
    std::filesystem::path gt;
    std::filesystem::path outputDir;
    GridSize size = kDefaultGridSize;
    SamplingConvention convention = SamplingConvention::Paper;
    unsigned threads = 1;
    /// "auto" (PGM/PPM when possible, else PNG), "pgm", "ppm", "pnm" or "png".
    std::string format = "auto";
};

struct OverlayCommand {
    std::filesystem::path image;
    std::filesystem::path gt;
    std::filesystem::path output;
    std::size_t curveSamples = 64;
    /// Embed the image as a PNG data URI; otherwise link to `image`.
    bool embedImage = true;
};

struct BenchCommand {
    std::size_t imageSize = 1024;
    std::size_t regions = 1000;
    GridSize size = kDefaultGridSize;
    SamplingConvention convention = SamplingConvention::Paper;
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

struct BenchReport {
    std::size_t regions = 0;
    unsigned threads = 1;
    double seconds = 0.0;
    std::uint64_t checksum = 0;
    std::size_t failed = 0;

    double regionsPerSecond() const { return seconds > 0.0 ? static_cast<double>(regions) / seconds : 0.0; }
};

int runConvert(const ConvertCommand& cmd, std::ostream& out, std::ostream& err);
int runWarp(const WarpCommand& cmd, std::ostream& out, std::ostream& err);
int runOverlay(const OverlayCommand& cmd, std::ostream& out, std::ostream& err);
int runBench(const BenchCommand& cmd, std::ostream& out, std::ostream& err);

/// Seeded single-channel image with samples in [0, 255].
ImageBuffer makeBenchImage(std::size_t size, std::uint64_t seed);

/// Seeded curved regions lying mostly inside a size x size image.
std::vector<BezierTextRegion> makeBenchRegions(std::size_t count, std::size_t size, std::uint64_t seed);

/// FNV-1a over the bit patterns of every output sample, in batch order.
/// Failed regions contribute their index.
std::uint64_t warpChecksum(std::span<const WarpResult> results);

BenchReport runBenchmark(const BenchCommand& cmd);

} // namespace curvetext::tools

#endif // CURVETEXT_TOOLS_COMMANDS_HPP
