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

#include <curvetext/annotation_io.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace curvetext {

namespace {

std::string_view trim(std::string_view s) {
    const auto isSpace = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && isSpace(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && isSpace(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> parseNumber(std::string_view field) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    if (field.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size()) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> splitFields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::size_t expectedPoints(PolygonDialect dialect) {
    switch (dialect) {
    case PolygonDialect::TenPoint:
        return 10;
    case PolygonDialect::FourteenPoint:
        return 14;
    case PolygonDialect::Generic:
        return 0;
    }
    return 0;
}

AnnotatedInstance parseLine(std::string_view line, PolygonDialect dialect, std::size_t lineNo) {
    const auto fields = splitFields(line);
    std::size_t numericRun = 0;
    while (numericRun < fields.size() && parseNumber(fields[numericRun])) {
        ++numericRun;
    }

    std::size_t coordFields = 0;
    if (const std::size_t expected = expectedPoints(dialect); expected != 0) {
        coordFields = 2 * expected;
        if (fields.size() == coordFields) {
            throw ParseError("missing transcription field", lineNo);
        }
        const std::size_t found = std::min(numericRun, fields.size() - 1) / 2;
        if (found != expected) {
            throw ParseError(
                "expected " + std::to_string(expected) + " points for dialect "
                    + std::string(toString(dialect)) + ", got " + std::to_string(found),
                lineNo);
        }
    }
    else {
        if (numericRun == fields.size() && fields.size() % 2 == 0) {
            throw ParseError("missing transcription field", lineNo);
        }
        coordFields = std::min(numericRun, fields.size() - 1) & ~std::size_t{1};
        const std::size_t points = coordFields / 2;
        if (points < 4 || points % 2 != 0) {
            throw ParseError(
                "a polygon needs an even number (>= 4) of points, got " + std::to_string(points),
                lineNo);
        }
    }

    AnnotatedInstance instance;
    instance.polygon.reserve(coordFields / 2);
    for (std::size_t i = 0; i < coordFields; i += 2) {
        const double x = *parseNumber(fields[i]);
        const double y = *parseNumber(fields[i + 1]);
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw ParseError("coordinate of point " + std::to_string(i / 2) + " is not finite", lineNo);
        }
        if (x < 0.0 || y < 0.0) {
            throw ParseError("coordinate of point " + std::to_string(i / 2) + " is negative", lineNo);
        }
        instance.polygon.push_back({x, y});
    }
    // The transcription is the rest of the line verbatim.
    std::size_t offset = 0;
    for (std::size_t i = 0; i < coordFields; ++i) {
        offset += fields[i].size() + 1;
    }
    instance.transcription = std::string(line.substr(offset));
    return instance;
}

void appendNumber(std::string& out, double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, end);
}

using Json = nlohmann::ordered_json;

constexpr std::string_view kFormatName = "bezier-gt";

template<typename T>
T require(const Json& object, const char* key, const char* context) {
    const auto it = object.find(key);
    if (it == object.end()) {
        throw SchemaError(std::string(context) + " is missing \"" + key + "\"");
    }
    try {
        return it->get<T>();
    }
    catch (const nlohmann::json::exception&) {
        throw SchemaError(std::string(context) + " has an invalid \"" + key + "\"");
    }
}

} // namespace

std::optional<PolygonDialect> dialectFromString(std::string_view name) {
    if (name == "ten_point") {
        return PolygonDialect::TenPoint;
    }
    if (name == "fourteen_point") {
        return PolygonDialect::FourteenPoint;
    }
    if (name == "generic" || name == "generic_csv") {
        return PolygonDialect::Generic;
    }
    return std::nullopt;
}

std::string_view toString(PolygonDialect dialect) {
    switch (dialect) {
    case PolygonDialect::TenPoint:
        return "ten_point";
    case PolygonDialect::FourteenPoint:
        return "fourteen_point";
    case PolygonDialect::Generic:
        return "generic";
    }
    return "unknown";
}

std::vector<AnnotatedInstance> parsePolygonFile(std::string_view content, PolygonDialect dialect) {
    constexpr std::string_view bom = "\xEF\xBB\xBF";
    if (content.starts_with(bom)) {
        content.remove_prefix(bom.size());
    }
    std::vector<AnnotatedInstance> instances;
    std::size_t lineNo = 0;
    while (!content.empty()) {
        ++lineNo;
        const std::size_t nl = content.find('\n');
        std::string_view line = content.substr(0, nl);
        content.remove_prefix(nl == std::string_view::npos ? content.size() : nl + 1);
        if (line.ends_with('\r')) {
            line.remove_suffix(1);
        }
        if (trim(line).empty()) {
            continue;
        }
        instances.push_back(parseLine(line, dialect, lineNo));
    }
    return instances;
}

std::string formatPolygonFile(std::span<const AnnotatedInstance> instances) {
    std::string out;
    for (const AnnotatedInstance& instance : instances) {
        for (const Point2& p : instance.polygon) {
            appendNumber(out, p.x);
            out += ',';
            appendNumber(out, p.y);
            out += ',';
        }
        out += instance.transcription;
        out += '\n';
    }
    return out;
}

BezierTextRegion toRegion(const BezierGtInstance& instance) {
    return fromChannels(instance.controlPoints, instance.transcription);
}

BezierGtFile readBezierGt(std::string_view content) {
    Json doc;
    try {
        doc = Json::parse(content);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed BezierGT JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("BezierGT document must be a JSON object");
    }
    if (require<std::string>(doc, "format", "document") != kFormatName) {
        throw SchemaError("document is not a BezierGT file");
    }
    const auto versionIt = doc.find("version");
    if (versionIt == doc.end()) {
        throw SchemaError("document is missing \"version\"");
    }
    if (!versionIt->is_number_integer() || versionIt->get<long long>() != kBezierGtVersion) {
        throw SchemaError(
            "unsupported BezierGT version " + versionIt->dump() + ", expected "
            + std::to_string(kBezierGtVersion));
    }

    BezierGtFile file;
    file.imageId = require<std::string>(doc, "image_id", "document");
    if (const auto it = doc.find("image_size"); it != doc.end() && !it->is_null()) {
        if (!it->is_object()) {
            throw SchemaError("\"image_size\" must be an object");
        }
        ImageSize size{
            require<std::size_t>(*it, "width", "image_size"),
            require<std::size_t>(*it, "height", "image_size")};
        if (size.width == 0 || size.height == 0) {
            throw SchemaError("\"image_size\" dimensions must be positive");
        }
        file.imageSize = size;
    }

    const auto instances = doc.find("instances");
    if (instances == doc.end() || !instances->is_array()) {
        throw SchemaError("document is missing the \"instances\" array");
    }
    for (const Json& item : *instances) {
        if (!item.is_object()) {
            throw SchemaError("instance must be a JSON object");
        }
        const auto cps = require<std::vector<Json>>(item, "control_points", "instance");
        if (cps.size() != kRegionChannels) {
            throw SchemaError(
                "instance has " + std::to_string(cps.size()) + " control-point scalars, expected "
                + std::to_string(kRegionChannels));
        }
        BezierGtInstance instance;
        for (std::size_t i = 0; i < kRegionChannels; ++i) {
            if (!cps[i].is_number()) {
                throw SchemaError("control-point scalar is not a number");
            }
            instance.controlPoints[i] = cps[i].get<double>();
            if (!std::isfinite(instance.controlPoints[i])) {
                throw SchemaError("control-point scalar is not finite");
            }
        }
        instance.transcription = require<std::string>(item, "transcription", "instance");
        if (const auto it = item.find("ignore"); it != item.end()) {
            if (!it->is_boolean()) {
                throw SchemaError("\"ignore\" must be a boolean");
            }
            instance.ignore = it->get<bool>();
        }
        file.instances.push_back(std::move(instance));
    }

    if (const auto it = doc.find("failures"); it != doc.end()) {
        if (!it->is_array()) {
            throw SchemaError("\"failures\" must be an array");
        }
        for (const Json& item : *it) {
            if (!item.is_object()) {
                throw SchemaError("failure must be a JSON object");
            }
            file.failures.push_back(
                {require<std::size_t>(item, "index", "failure"),
                 require<std::string>(item, "reason", "failure")});
        }
    }
    return file;
}

std::string writeBezierGt(const BezierGtFile& file) {
    Json doc;
    doc["format"] = kFormatName;
    doc["version"] = kBezierGtVersion;
    doc["image_id"] = file.imageId;
    if (file.imageSize) {
        doc["image_size"] = {{"width", file.imageSize->width}, {"height", file.imageSize->height}};
    }
    Json instances = Json::array();
    for (const BezierGtInstance& instance : file.instances) {
        Json cps = Json::array();
        for (double v : instance.controlPoints) {
            if (!std::isfinite(v)) {
                throw SchemaError("cannot serialize a non-finite control-point scalar");
            }
            cps.push_back(v);
        }
        Json item;
        item["control_points"] = std::move(cps);
        item["transcription"] = instance.transcription;
        item["ignore"] = instance.ignore;
        instances.push_back(std::move(item));
    }
    doc["instances"] = std::move(instances);
    Json failures = Json::array();
    for (const ConversionFailure& failure : file.failures) {
        failures.push_back({{"index", failure.index}, {"reason", failure.reason}});
    }
    doc["failures"] = std::move(failures);
    return doc.dump(2) + "\n";
}

double ConversionResult::maxResidual() const {
    double m = 0.0;
    for (double r : residuals) {
        m = std::max(m, r);
    }
    return m;
}

ConversionResult convertInstances(
    std::span<const AnnotatedInstance> instances,
    std::string imageId,
    const ConvertOptions& options) {
    ConversionResult result;
    result.file.imageId = std::move(imageId);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const AnnotatedInstance& source = instances[i];
        try {
            const auto [top, bottom] = splitPolygon(source.polygon, options.polygon.winding);
            const ChordParams topParams = chordLengthParams(top);
            const ChordParams bottomParams = chordLengthParams(bottom);
            const CubicBezier topCurve = fitCubic(top, topParams, options.polygon.fit);
            const CubicBezier bottomCurve = fitCubic(bottom, bottomParams, options.polygon.fit);

            const BezierTextRegion region{topCurve, bottomCurve, source.transcription};
            result.file.instances.push_back({toChannels(region), source.transcription, source.ignored()});
            result.residuals.push_back(std::max(
                fittingResidual(top, topCurve, topParams),
                fittingResidual(bottom, bottomCurve, bottomParams)));
        }
        catch (const Error& e) {
            result.file.failures.push_back({i, e.what()});
            if (options.strict) {
                throw ConversionError(
                    "instance " + std::to_string(i) + " failed to convert: " + e.what(),
                    result.file.failures);
            }
        }
    }
    if (!instances.empty() && result.file.instances.empty()) {
        throw ConversionError("no instance could be converted", result.file.failures);
    }
    return result;
}

} // namespace curvetext
