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

#include "commands.hpp"

#include "overlay.hpp"
#include "raster_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

namespace curvetext::tools {

namespace fs = std::filesystem;

namespace {

// One-line JSON error report for scripts.
void reportError(
    std::ostream& err,
    std::string_view kind,
    std::string_view message,
    const fs::path& file = {},
    std::size_t line = 0) {
    nlohmann::ordered_json report;
    report["error"] = kind;
    report["message"] = message;
    if (!file.empty()) {
        report["file"] = file.string();
    }
    if (line) {
        report["line"] = line;
    }
    err << report.dump() << '\n';
}

std::optional<ImageSize> siblingImageSize(const fs::path& annotation) {
    for (const char* ext : {".png", ".pgm", ".ppm"}) {
        fs::path candidate = annotation;
        candidate.replace_extension(ext);
        if (fs::is_regular_file(candidate)) {
            const Raster raster = readRaster(candidate);
            return ImageSize{raster.image.width(), raster.image.height()};
        }
    }
    return std::nullopt;
}

struct FileSummary {
    std::string name;
    std::size_t instances = 0;
    std::size_t ignored = 0;
    std::size_t failed = 0;
    double maxResidual = 0.0;
};

std::string formatRow(const FileSummary& row) {
    char buf[256];
    std::snprintf(
        buf, sizeof(buf), "%-28s %9zu %8zu %7zu %13.6f", row.name.c_str(), row.instances,
        row.ignored, row.failed, row.maxResidual);
    return buf;
}

// Converts one annotation file; returns an exit code.
int convertOne(
    const ConvertCommand& cmd,
    const fs::path& input,
    const fs::path& output,
    std::vector<FileSummary>& summary,
    std::ostream& err) {
    try {
        const std::string text = readTextFile(input);
        const auto instances = parsePolygonFile(text, cmd.dialect);
        ConversionResult result = convertInstances(instances, input.stem().string(), cmd.options);
        result.file.imageSize = siblingImageSize(input);
        writeFile(output, writeBezierGt(result.file));

        FileSummary row;
        row.name = input.filename().string();
        row.instances = result.file.instances.size();
        row.ignored = static_cast<std::size_t>(std::count_if(
            result.file.instances.begin(), result.file.instances.end(),
            [](const BezierGtInstance& i) { return i.ignore; }));
        row.failed = result.file.failures.size();
        row.maxResidual = result.maxResidual();
        summary.push_back(row);
        return kExitOk;
    }
    catch (const ParseError& e) {
        reportError(err, "parse", e.what(), input, e.line());
        return kExitParse;
    }
    catch (const IoError& e) {
        reportError(err, "io", e.what(), input);
        return kExitIo;
    }
    catch (const Error& e) {
        reportError(err, "validation", e.what(), input);
        return kExitValidation;
    }
}

const char* defaultExtension(std::size_t channels) {
    return channels == 1 ? ".pgm" : channels == 3 ? ".ppm" : ".png";
}

} // namespace

GridSize parseGridSize(std::string_view text) {
    const std::size_t x = text.find_first_of("xX");
    const auto parse = [&](std::string_view part) -> std::size_t {
        std::size_t value = 0;
        const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || end != part.data() + part.size() || value == 0) {
            throw InvalidArgument("invalid output size \"" + std::string(text) + "\", expected HxW like 7x32");
        }
        return value;
    };
    if (x == std::string_view::npos) {
        throw InvalidArgument("invalid output size \"" + std::string(text) + "\", expected HxW like 7x32");
    }
    return GridSize{parse(text.substr(0, x)), parse(text.substr(x + 1))};
}

std::optional<SamplingConvention> conventionFromString(std::string_view name) {
    if (name == "paper") {
        return SamplingConvention::Paper;
    }
    if (name == "center") {
        return SamplingConvention::PixelCenter;
    }
    if (name == "endpoint") {
        return SamplingConvention::Endpoint;
    }
    return std::nullopt;
}

int runConvert(const ConvertCommand& cmd, std::ostream& out, std::ostream& err) {
    std::vector<std::pair<fs::path, fs::path>> jobs;
    try {
        if (fs::is_directory(cmd.input)) {
            std::vector<fs::path> inputs;
            for (const auto& entry : fs::directory_iterator(cmd.input)) {
                if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                    inputs.push_back(entry.path());
                }
            }
            std::sort(inputs.begin(), inputs.end());
            if (inputs.empty()) {
                out << "0 files: no *.txt annotations in " << cmd.input.string() << '\n';
                return kExitOk;
            }
            fs::create_directories(cmd.output);
            for (const fs::path& in : inputs) {
                fs::path target = cmd.output / in.filename();
                target.replace_extension(".json");
                jobs.emplace_back(in, target);
            }
        }
        else if (fs::is_regular_file(cmd.input)) {
            fs::path target = cmd.output;
            if (fs::is_directory(target)) {
                target = target / cmd.input.filename();
                target.replace_extension(".json");
            }
            jobs.emplace_back(cmd.input, target);
        }
        else {
            reportError(err, "io", "input does not exist", cmd.input);
            return kExitIo;
        }
    }
    catch (const fs::filesystem_error& e) {
        reportError(err, "io", e.what(), cmd.input);
        return kExitIo;
    }

    std::vector<FileSummary> summary;
    int status = kExitOk;
    for (const auto& [in, target] : jobs) {
        const int code = convertOne(cmd, in, target, summary, err);
        if (status == kExitOk) {
            status = code;
        }
    }

    out << formatRow({"file", 0, 0, 0, 0.0}).substr(0, 28)
        << " instances  ignored  failed  max_residual\n";
    for (const FileSummary& row : summary) {
        out << formatRow(row) << '\n';
    }
    out << summary.size() << (summary.size() == 1 ? " file" : " files") << " converted";
    if (summary.size() != jobs.size()) {
        out << ", " << jobs.size() - summary.size() << " failed";
    }
    out << '\n';
    return status;
}

int runWarp(const WarpCommand& cmd, std::ostream& out, std::ostream& err) {
    BezierGtFile gt;
    try {
        gt = readBezierGt(readTextFile(cmd.gt));
    }
    catch (const IoError& e) {
        reportError(err, "io", e.what(), cmd.gt);
        return kExitIo;
    }
    catch (const SchemaError& e) {
        reportError(err, "parse", e.what(), cmd.gt);
        return kExitParse;
    }

    Raster raster{ImageBuffer(1, 1, 1), 255};
    try {
        raster = readRaster(cmd.image);
    }
    catch (const IoError& e) {
        reportError(err, "io", e.what(), cmd.image);
        return kExitIo;
    }
    if (gt.imageSize
        && (gt.imageSize->width != raster.image.width() || gt.imageSize->height != raster.image.height())) {
        reportError(
            err, "validation",
            "ground truth is for a " + std::to_string(gt.imageSize->width) + "x"
                + std::to_string(gt.imageSize->height) + " image but the image is "
                + std::to_string(raster.image.width()) + "x" + std::to_string(raster.image.height()),
            cmd.gt);
        return kExitValidation;
    }

    std::string ext;
    if (cmd.format == "auto") {
        ext = defaultExtension(raster.image.channels());
    }
    else if (cmd.format == "png" || cmd.format == "pgm" || cmd.format == "ppm" || cmd.format == "pnm") {
        ext = "." + cmd.format;
    }
    else {
        reportError(err, "validation", "unknown output format \"" + cmd.format + "\"");
        return kExitValidation;
    }

    std::vector<BezierTextRegion> regions;
    regions.reserve(gt.instances.size());
    for (const BezierGtInstance& instance : gt.instances) {
        regions.push_back(toRegion(instance));
    }

    std::vector<WarpResult> results;
    try {
        results = warpBatch(raster.image, regions, {cmd.size, cmd.convention, cmd.threads});
    }
    catch (const Error& e) {
        reportError(err, "validation", e.what());
        return kExitValidation;
    }

    try {
        fs::create_directories(cmd.outputDir);
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (!results[i].ok()) {
                reportError(err, "validation", "instance " + std::to_string(i) + ": " + results[i].error, cmd.gt);
                return kExitValidation;
            }
            char name[32];
            std::snprintf(name, sizeof(name), "instance_%04zu", i);
            writeRaster(cmd.outputDir / (name + ext), *results[i].image, raster.maxValue);
        }
    }
    catch (const IoError& e) {
        reportError(err, "io", e.what(), cmd.outputDir);
        return kExitIo;
    }
    catch (const fs::filesystem_error& e) {
        reportError(err, "io", e.what(), cmd.outputDir);
        return kExitIo;
    }

    out << "wrote " << results.size() << " crops of " << cmd.size.width << "x" << cmd.size.height
        << " (width x height) to " << cmd.outputDir.string() << '\n';
    return kExitOk;
}

int runOverlay(const OverlayCommand& cmd, std::ostream& out, std::ostream& err) {
    BezierGtFile gt;
    try {
        gt = readBezierGt(readTextFile(cmd.gt));
    }
    catch (const IoError& e) {
        reportError(err, "io", e.what(), cmd.gt);
        return kExitIo;
    }
    catch (const SchemaError& e) {
        reportError(err, "parse", e.what(), cmd.gt);
        return kExitParse;
    }
    if (cmd.curveSamples < 2) {
        reportError(err, "validation", "curve samples must be at least 2");
        return kExitValidation;
    }

    try {
        const std::vector<std::uint8_t> bytes = readFileBytes(cmd.image);
        Raster raster = decodeRaster(bytes);
        std::string href;
        if (!cmd.embedImage) {
            href = cmd.image.string();
        }
        else if (bytes.size() >= 4 && bytes[1] == 'P' && bytes[2] == 'N' && bytes[3] == 'G') {
            href = "data:image/png;base64," + base64Encode(bytes);
        }
        else {
            if (raster.maxValue != 255) {
                const double scale = 255.0 / raster.maxValue;
                for (double& v : raster.image.data()) {
                    v *= scale;
                }
            }
            href = "data:image/png;base64," + base64Encode(encodePng(raster.image));
        }
        OverlayStyle style;
        style.curveSamples = cmd.curveSamples;
        writeFile(cmd.output, renderOverlaySvg(gt, raster.image.width(), raster.image.height(), href, style));
    }
    catch (const IoError& e) {
        reportError(err, "io", e.what(), cmd.image);
        return kExitIo;
    }
    out << "wrote overlay with " << gt.instances.size() << " instances to " << cmd.output.string() << '\n';
    return kExitOk;
}

ImageBuffer makeBenchImage(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> data(size * size);
    for (double& v : data) {
        v = static_cast<double>(rng() >> 56);
    }
    return ImageBuffer(size, size, 1, std::move(data));
}

std::vector<BezierTextRegion> makeBenchRegions(std::size_t count, std::size_t size, std::uint64_t seed) {
    // Separate stream from the image so both can vary independently.
    std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ull);
    const double extent = static_cast<double>(size);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<BezierTextRegion> regions;
    regions.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double w = extent * (0.05 + 0.25 * unit(rng));
        const double h = extent * (0.01 + 0.05 * unit(rng));
        const double x = (extent - w) * unit(rng);
        const double y = (extent - h) * unit(rng);
        const double bend1 = h * (unit(rng) - 0.5);
        const double bend2 = h * (unit(rng) - 0.5);
        const CubicBezier top(
            Point2{x, y},
            Point2{x + w / 3.0, y + bend1},
            Point2{x + 2.0 * w / 3.0, y + bend2},
            Point2{x + w, y});
        const CubicBezier bottom(
            Point2{x, y + h},
            Point2{x + w / 3.0, y + h + bend1},
            Point2{x + 2.0 * w / 3.0, y + h + bend2},
            Point2{x + w, y + h});
        regions.push_back({top, bottom, std::nullopt});
    }
    return regions;
}

std::uint64_t warpChecksum(std::span<const WarpResult> results) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    const auto mix = [&](std::uint64_t word) {
        for (int b = 0; b < 8; ++b) {
            hash ^= (word >> (8 * b)) & 0xFF;
            hash *= 0x100000001b3ull;
        }
    };
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].ok()) {
            mix(i);
            continue;
        }
        for (double v : results[i].image->data()) {
            mix(std::bit_cast<std::uint64_t>(v));
        }
    }
    return hash;
}

BenchReport runBenchmark(const BenchCommand& cmd) {
    const ImageBuffer image = makeBenchImage(cmd.imageSize, cmd.seed);
    const std::vector<BezierTextRegion> regions = makeBenchRegions(cmd.regions, cmd.imageSize, cmd.seed);

    const auto start = std::chrono::steady_clock::now();
    const std::vector<WarpResult> results = warpBatch(image, regions, {cmd.size, cmd.convention, cmd.threads});
    const auto stop = std::chrono::steady_clock::now();

    BenchReport report;
    report.regions = regions.size();
    report.threads = cmd.threads;
    report.seconds = std::chrono::duration<double>(stop - start).count();
    report.checksum = warpChecksum(results);
    report.failed = static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const WarpResult& r) { return !r.ok(); }));
    return report;
}

int runBench(const BenchCommand& cmd, std::ostream& out, std::ostream& err) {
    if (cmd.imageSize == 0 || cmd.size.height == 0 || cmd.size.width == 0) {
        reportError(err, "validation", "image size and output size must be positive");
        return kExitValidation;
    }
    const BenchReport report = runBenchmark(cmd);
    char checksum[32];
    std::snprintf(checksum, sizeof(checksum), "%016llx", static_cast<unsigned long long>(report.checksum));
    out << "image_size: " << cmd.imageSize << "x" << cmd.imageSize << '\n'
        << "output_size: " << cmd.size.height << "x" << cmd.size.width << '\n'
        << "regions: " << report.regions << '\n'
        << "threads: " << report.threads << '\n'
        << "seed: " << cmd.seed << '\n'
        << "wall_seconds: " << report.seconds << '\n'
        << "regions_per_second: " << report.regionsPerSecond() << '\n'
        << "failed: " << report.failed << '\n'
        << "checksum: " << checksum << '\n';
    return report.failed == 0 ? kExitOk : kExitValidation;
}

} // namespace curvetext::tools
