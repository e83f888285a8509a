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

#ifndef CURVETEXT_ANNOTATION_IO_HPP
#define CURVETEXT_ANNOTATION_IO_HPP

#include <curvetext/bbox_codec.hpp>
#include <curvetext/curve_fit.hpp>
#include <curvetext/errors.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curvetext {

/// Transcription of instances that are excluded from evaluation.
inline constexpr std::string_view kIgnoreMarker = "###";

/// Line-oriented polygon annotation styles, "x1,y1,...,xn,yn,transcription".
enum class PolygonDialect {
    TenPoint,      ///< exactly 10 points (5 per side, Total-Text style)
    FourteenPoint, ///< exactly 14 points (7 per side, CTW1500 style)
    Generic,       ///< any even count >= 4
};

/// Accepts "ten_point", "fourteen_point", "generic" and "generic_csv".
std::optional<PolygonDialect> dialectFromString(std::string_view name);
std::string_view toString(PolygonDialect dialect);

struct AnnotatedInstance {
    std::vector<Point2> polygon;
    std::string transcription;

    bool ignored() const { return transcription == kIgnoreMarker; }

    friend bool operator==(const AnnotatedInstance&, const AnnotatedInstance&) = default;
};

/// Parses UTF-8 annotation text. Blank lines are skipped; CRLF line endings
/// and a leading byte-order mark are accepted.
///
/// With the fixed-count dialects the first 20 or 28 fields are coordinates and
/// everything after them, commas included, is the transcription. With
/// Generic, coordinates are the longest even run of leading numeric fields
/// that still leaves a transcription field.
///
/// Throws ParseError (with a 1-based line number) on malformed numbers, a
/// missing transcription, negative or non-finite coordinates, or a point
/// count the dialect does not allow.
std::vector<AnnotatedInstance> parsePolygonFile(std::string_view content, PolygonDialect dialect);

/// Inverse of parsePolygonFile(): one line per instance, shortest
/// round-trip number formatting.
std::string formatPolygonFile(std::span<const AnnotatedInstance> instances);

/// Current BezierGT schema version.
inline constexpr int kBezierGtVersion = 1;

struct BezierGtInstance {
    RegionChannels controlPoints{};
    std::string transcription;
    bool ignore = false;

    friend bool operator==(const BezierGtInstance&, const BezierGtInstance&) = default;
};

struct ImageSize {
    std::size_t width = 0;
    std::size_t height = 0;

    friend bool operator==(ImageSize, ImageSize) = default;
};

/// An input instance that could not be converted.
struct ConversionFailure {
    std::size_t index = 0;
    std::string reason;

    friend bool operator==(const ConversionFailure&, const ConversionFailure&) = default;
};

struct BezierGtFile {
    std::string imageId;
    std::optional<ImageSize> imageSize;
    std::vector<BezierGtInstance> instances;
    std::vector<ConversionFailure> failures;

    friend bool operator==(const BezierGtFile&, const BezierGtFile&) = default;
};

BezierTextRegion toRegion(const BezierGtInstance& instance);

/// Parses a BezierGT JSON document. Throws SchemaError on malformed JSON, a
/// missing or unsupported version, or an instance without exactly 16 finite
/// scalars.
BezierGtFile readBezierGt(std::string_view content);

/// Serializes with canonical key order and round-trip exact numbers.
/// Throws SchemaError if a value is not finite.
std::string writeBezierGt(const BezierGtFile& file);

/// Every instance of a file failed to convert (or one failed under strict
/// conversion).
class ConversionError : public Error {
public:
    ConversionError(const std::string& what, std::vector<ConversionFailure> failures)
        : Error(what), failures_(std::move(failures)) {}

    const std::vector<ConversionFailure>& failures() const { return failures_; }

private:
    std::vector<ConversionFailure> failures_;
};

struct ConvertOptions {
    PolygonOptions polygon;
    /// Fail on the first instance that cannot be converted.
    bool strict = false;
};

struct ConversionResult {
    BezierGtFile file;
    /// Per converted instance, the larger of the top and bottom RMS fitting
    /// residuals, in file.instances order.
    std::vector<double> residuals;

    double maxResidual() const;
};

/// Converts every polygon to Bezier ground truth, preserving order. Ignore
/// instances are converted too and flagged. Failures are recorded in
/// file.failures; ConversionError is thrown if there was at least one
/// instance and none converted, or on any failure when strict.
ConversionResult convertInstances(
    std::span<const AnnotatedInstance> instances,
    std::string imageId = {},
    const ConvertOptions& options = {});

} // namespace curvetext

#endif // CURVETEXT_ANNOTATION_IO_HPP
