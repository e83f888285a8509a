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

#include <CLI11.hpp>

#include <iostream>

using namespace curvetext;
using namespace curvetext::tools;

int main(int argc, char** argv) {
    CLI::App app{"Bezier-curve text region tools: annotation conversion, rectification, overlays"};
    app.require_subcommand(1);

    // convert
    ConvertCommand convert;
    std::string dialect = "generic";
    std::string winding = "bottom_reversed";
    std::string endpoints = "fixed";
    auto* convertCmd = app.add_subcommand("convert", "Convert polygon annotations to BezierGT JSON");
    convertCmd->add_option("--in", convert.input, "Annotation file or directory of *.txt files")->required();
    convertCmd->add_option("--out", convert.output, "Output JSON file or directory")->required();
    convertCmd->add_option("--dialect", dialect, "Polygon dialect")
        ->check(CLI::IsMember({"ten_point", "fourteen_point", "generic", "generic_csv"}))
        ->capture_default_str();
    convertCmd->add_option("--winding", winding, "Orientation of the polygon's second half")
        ->check(CLI::IsMember({"bottom_reversed", "bottom_forward"}))
        ->capture_default_str();
    convertCmd->add_option("--endpoints", endpoints, "Endpoint handling of the least-squares fit")
        ->check(CLI::IsMember({"fixed", "free"}))
        ->capture_default_str();
    convertCmd->add_flag("--strict", convert.options.strict, "Fail on the first unconvertible instance");

    // warp
    WarpCommand warp;
    std::string warpSize = "7x32";
    std::string warpConvention = "paper";
    auto* warpCmd = app.add_subcommand("warp", "Rectify every instance of a BezierGT file into a fixed-size crop");
    warpCmd->add_option("--image", warp.image, "Source image (PGM, PPM or PNG)")->required();
    warpCmd->add_option("--gt", warp.gt, "BezierGT JSON for the image")->required();
    warpCmd->add_option("--out", warp.outputDir, "Output directory")->required();
    warpCmd->add_option("--size", warpSize, "Output size HxW")->capture_default_str();
    warpCmd->add_option("--convention", warpConvention, "Sampling-grid indexing convention")
        ->check(CLI::IsMember({"paper", "center", "endpoint"}))
        ->capture_default_str();
    warpCmd->add_option("--threads", warp.threads, "Worker threads (0 = all cores)")->capture_default_str();
    warpCmd->add_option("--format", warp.format, "Crop format")
        ->check(CLI::IsMember({"auto", "pgm", "ppm", "pnm", "png"}))
        ->capture_default_str();

    // overlay
    OverlayCommand overlay;
    bool linkImage = false;
    auto* overlayCmd = app.add_subcommand("overlay", "Draw curves and control polygons over an image as SVG");
    overlayCmd->add_option("--image", overlay.image, "Background image (PGM, PPM or PNG)")->required();
    overlayCmd->add_option("--gt", overlay.gt, "BezierGT JSON")->required();
    overlayCmd->add_option("--out", overlay.output, "Output SVG path")->required();
    overlayCmd->add_option("--samples", overlay.curveSamples, "Polyline points per curve")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    overlayCmd->add_flag("--link-image", linkImage, "Reference the image by path instead of embedding it");

    // bench
    BenchCommand bench;
    std::string benchSize = "7x32";
    std::string benchConvention = "paper";
    auto* benchCmd = app.add_subcommand("bench", "Time warping of seeded random regions");
    benchCmd->add_option("--image-size", bench.imageSize, "Square image side in pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    benchCmd->add_option("--regions", bench.regions, "Number of regions")->capture_default_str();
    benchCmd->add_option("--size", benchSize, "Output size HxW")->capture_default_str();
    benchCmd->add_option("--convention", benchConvention, "Sampling-grid indexing convention")
        ->check(CLI::IsMember({"paper", "center", "endpoint"}))
        ->capture_default_str();
    benchCmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)")->capture_default_str();
    benchCmd->add_option("--seed", bench.seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*convertCmd) {
            convert.dialect = *dialectFromString(dialect);
            convert.options.polygon.winding =
                winding == "bottom_forward" ? PolygonWinding::BottomForward : PolygonWinding::BottomReversed;
            convert.options.polygon.fit.endpoints = endpoints == "free" ? EndpointMode::Free : EndpointMode::Fixed;
            return runConvert(convert, std::cout, std::cerr);
        }
        if (*warpCmd) {
            warp.size = parseGridSize(warpSize);
            warp.convention = *conventionFromString(warpConvention);
            return runWarp(warp, std::cout, std::cerr);
        }
        if (*overlayCmd) {
            overlay.embedImage = !linkImage;
            return runOverlay(overlay, std::cout, std::cerr);
        }
        if (*benchCmd) {
            bench.size = parseGridSize(benchSize);
            bench.convention = *conventionFromString(benchConvention);
            return runBench(bench, std::cout, std::cerr);
        }
    }
    catch (const InvalidArgument& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
