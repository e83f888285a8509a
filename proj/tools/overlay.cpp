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

#include "overlay.hpp"

#include <charconv>

namespace curvetext::tools {

namespace {

void appendNumber(std::string& out, double v) {
    char buf[32];
    // Two decimals are plenty at pixel scale and keep files diffable.
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    out.append(buf, end);
}

void appendPoints(std::string& out, std::span<const Point2> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) {
            out += ' ';
        }
        appendNumber(out, points[i].x);
        out += ',';
        appendNumber(out, points[i].y);
    }
}

std::string escapeXml(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string renderOverlaySvg(
    const BezierGtFile& gt,
    std::size_t width,
    std::size_t height,
    std::string_view imageHref,
    const OverlayStyle& style) {
    const std::string w = std::to_string(width);
    const std::string h = std::to_string(height);
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" width=\""
        + w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    if (!imageHref.empty()) {
        svg += "  <image x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" xlink:href=\""
            + escapeXml(imageHref) + "\"/>\n";
    }

    std::string stroke;
    appendNumber(stroke, style.strokeWidth);
    std::string radius;
    appendNumber(radius, style.pointRadius);

    for (std::size_t i = 0; i < gt.instances.size(); ++i) {
        const BezierGtInstance& instance = gt.instances[i];
        const BezierTextRegion region = toRegion(instance);
        svg += "  <g class=\"instance\" data-index=\"" + std::to_string(i) + "\" data-transcription=\""
            + escapeXml(instance.transcription) + "\"" + (instance.ignore ? " data-ignore=\"true\"" : "")
            + ">\n";
        for (const CubicBezier* curve : {&region.top, &region.bottom}) {
            svg += "    <polyline class=\"bezier-curve\" fill=\"none\" stroke=\"#00b050\" stroke-width=\""
                + stroke + "\" points=\"";
            appendPoints(svg, curve->sample(style.curveSamples));
            svg += "\"/>\n";
        }
        for (const CubicBezier* curve : {&region.top, &region.bottom}) {
            svg += "    <polyline class=\"control-polygon\" fill=\"none\" stroke=\"#ff0000\" stroke-width=\"1.00\""
                   " stroke-dasharray=\"4 3\" points=\"";
            appendPoints(svg, curve->controls());
            svg += "\"/>\n";
        }
        for (const CubicBezier* curve : {&region.top, &region.bottom}) {
            for (const Point2& p : curve->controls()) {
                svg += "    <circle class=\"control-point\" fill=\"#ff0000\" r=\"" + radius + "\" cx=\"";
                appendNumber(svg, p.x);
                svg += "\" cy=\"";
                appendNumber(svg, p.y);
                svg += "\"/>\n";
            }
        }
        svg += "  </g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string base64Encode(std::span<const std::uint8_t> bytes) {
    static constexpr char table[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 2 < bytes.size(); i += 3) {
        const std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
        out += table[(v >> 18) & 63];
        out += table[(v >> 12) & 63];
        out += table[(v >> 6) & 63];
        out += table[v & 63];
    }
    if (const std::size_t rest = bytes.size() - i; rest > 0) {
        std::uint32_t v = bytes[i] << 16;
        if (rest == 2) {
            v |= bytes[i + 1] << 8;
        }
        out += table[(v >> 18) & 63];
        out += table[(v >> 12) & 63];
        out += rest == 2 ? table[(v >> 6) & 63] : '=';
        out += '=';
    }
    return out;
}

} // namespace curvetext::tools
