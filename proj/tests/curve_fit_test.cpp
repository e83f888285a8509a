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

#include <curvetext/curve_fit.hpp>
#include <curvetext/errors.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace curvetext;
using curvetext::oracle::Rng;

namespace {

void expectNear(Point2 a, Point2 b, double tol) {
    EXPECT_NEAR(a.x, b.x, tol);
    EXPECT_NEAR(a.y, b.y, tol);
}

// Random boundary of n points wandering left to right.
std::vector<Point2> randomBoundary(Rng& rng, std::size_t n) {
    std::vector<Point2> pts;
    double x = rng.uniform(0, 100);
    for (std::size_t i = 0; i < n; ++i) {
        x += rng.uniform(5, 40);
        pts.push_back({x, rng.uniform(0, 60)});
    }
    return pts;
}

// Interior parameters strictly inside (0, 1), sorted, plus exact endpoints.
std::vector<double> randomParams(Rng& rng, std::size_t n) {
    std::vector<double> t(n);
    t.front() = 0.0;
    t.back() = 1.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        t[i] = rng.uniform(0.02, 0.98);
    }
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

TEST(PolylineBoundary, Validation) {
    EXPECT_THROW(PolylineBoundary({Point2{1, 1}}), InvalidArgument);
    EXPECT_THROW(PolylineBoundary({{0, 0}, {std::nan(""), 1}}), InvalidArgument);
    EXPECT_THROW(PolylineBoundary({{2, 2}, {2, 2}, {2, 2}}), DegenerateGeometry);
}

TEST(PolylineBoundary, MergesConsecutiveDuplicates) {
    const PolylineBoundary b({{0, 0}, {0, 0}, {1, 0}, {1, 0}, {2, 1}});
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b.points()[1], (Point2{1, 0}));
    // Non-consecutive repeats are kept.
    EXPECT_EQ(PolylineBoundary({{0, 0}, {1, 0}, {0, 0}}).size(), 3u);
}

TEST(ChordLengthParams, Examples) {
    EXPECT_EQ(chordLengthParams(PolylineBoundary({{0, 0}, {1, 0}, {2, 0}})).values(),
              (std::vector<double>{0, 0.5, 1}));
    EXPECT_EQ(chordLengthParams(PolylineBoundary({{0, 0}, {3, 0}, {4, 0}})).values(),
              (std::vector<double>{0, 0.75, 1}));
    // The duplicate is merged before parameterization.
    EXPECT_EQ(chordLengthParams(PolylineBoundary({{0, 0}, {0, 0}, {1, 0}})).values(),
              (std::vector<double>{0, 1}));
}

TEST(ChordLengthParams, MonotoneWithExactEndpoints) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const PolylineBoundary b(randomBoundary(rng, static_cast<std::size_t>(rng.integer(2, 12))));
        const auto t = chordLengthParams(b).values();
        EXPECT_EQ(t.front(), 0.0);
        EXPECT_EQ(t.back(), 1.0);
        EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
    }
}

TEST(ChordParams, Validation) {
    EXPECT_THROW(ChordParams({0.0}), InvalidArgument);
    EXPECT_THROW(ChordParams({0.1, 1.0}), InvalidArgument);
    EXPECT_THROW(ChordParams({0.0, 0.9}), InvalidArgument);
    EXPECT_THROW(ChordParams({0.0, 0.6, 0.4, 1.0}), InvalidArgument);
    EXPECT_NO_THROW(ChordParams({0.0, 0.5, 0.5, 1.0}));
}

TEST(FitCubic, ExactRecoveryFromModelPoints) {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const CubicBezier truth = rng.curve(0, 500);
        const auto n = static_cast<std::size_t>(rng.integer(4, 12));
        const auto t = randomParams(rng, n);
        std::vector<Point2> pts;
        for (double tj : t) {
            pts.push_back(truth.evaluate(tj));
        }
        const CubicBezier fit = fitCubic(PolylineBoundary(pts), ChordParams(t));
        EXPECT_EQ(fit.front(), truth.front());
        EXPECT_EQ(fit.back(), truth.back());
        for (std::size_t k : {1u, 2u}) {
            const double scale = std::max(1.0, std::hypot(truth[k].x, truth[k].y));
            EXPECT_LT(distance(fit[k], truth[k]) / scale, 1e-6);
        }
    }
}

TEST(FitCubic, CollinearEquispacedPoints) {
    std::vector<Point2> pts;
    for (int i = 0; i < 6; ++i) {
        pts.push_back({2.0 + 3.0 * i, 1.0 + 1.5 * i});
    }
    const PolylineBoundary b(pts);
    const ChordParams t = chordLengthParams(b);
    const CubicBezier fit = fitCubic(b, t);
    for (const Point2& p : fit.controls()) {
        EXPECT_NEAR(oracle::cross(pts.front(), pts.back(), p), 0.0, 1e-9);
    }
    EXPECT_LT(fittingResidual(b, fit, t), 1e-9);
}

TEST(FitCubic, TwoPointBoundaryUsesTripartitePoints) {
    const PolylineBoundary b({{0, 0}, {30, 12}});
    const CubicBezier fit = fitBoundary(b);
    EXPECT_EQ(fit.front(), (Point2{0, 0}));
    EXPECT_EQ(fit.back(), (Point2{30, 12}));
    expectNear(fit[1], {10, 4}, 1e-12);
    expectNear(fit[2], {20, 8}, 1e-12);
}

TEST(FitCubic, ThreePointBoundaryInterpolatesMiddle) {
    const PolylineBoundary b({{0, 0}, {5, 4}, {10, 0}});
    const ChordParams t = chordLengthParams(b);
    const CubicBezier fit = fitCubic(b, t);
    EXPECT_LT(fittingResidual(b, fit, t), 1e-12);
    // Symmetric input gives a symmetric minimum-norm solution.
    EXPECT_NEAR(fit[1].y, fit[2].y, 1e-12);
    EXPECT_NEAR(fit[1].x + fit[2].x, 10.0, 1e-12);
}

TEST(FitCubic, SizeMismatch) {
    const PolylineBoundary b({{0, 0}, {1, 1}, {2, 0}});
    EXPECT_THROW(fitCubic(b, ChordParams({0.0, 1.0})), InvalidArgument);
    EXPECT_THROW(fittingResidual(b, CubicBezier::line({0, 0}, {2, 0}), ChordParams({0.0, 1.0})), InvalidArgument);
}

TEST(FitCubic, ClusteredParamsAreRankDeficient) {
    const PolylineBoundary b({{0, 0}, {1, 3}, {2, 3}, {3, 0}});
    try {
        fitCubic(b, ChordParams({0.0, 1e-12, 2e-12, 1.0}));
        FAIL() << "expected ConditioningError";
    }
    catch (const ConditioningError& e) {
        EXPECT_GT(e.conditionEstimate(), 1e10);
    }
    // Identical interior parameters give a singular system.
    EXPECT_THROW(fitCubic(b, ChordParams({0.0, 0.5, 0.5, 1.0})), ConditioningError);
}

TEST(FitBoundary, OptimalAgainstRandomCandidates) {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const PolylineBoundary b(randomBoundary(rng, i % 2 ? 6 : 8));
        const ChordParams t = chordLengthParams(b);
        const CubicBezier fit = fitBoundary(b);
        const double best = fittingResidual(b, fit, t);
        for (int k = 0; k < 100; ++k) {
            const double spread = k < 50 ? 1e-3 : 20.0;
            const CubicBezier candidate(
                b.front(),
                fit[1] + Point2{rng.uniform(-spread, spread), rng.uniform(-spread, spread)},
                fit[2] + Point2{rng.uniform(-spread, spread), rng.uniform(-spread, spread)},
                b.back());
            EXPECT_LE(best, fittingResidual(b, candidate, t) + 1e-12);
        }
    }
}

TEST(FitBoundary, ComposesChordParamsAndFit) {
    Rng rng(14);
    const PolylineBoundary b(randomBoundary(rng, 7));
    EXPECT_EQ(fitBoundary(b), fitCubic(b, chordLengthParams(b)));
}

TEST(FitBoundary, SemicircleDeviationMatchesOracle) {
    // Frozen from an independent NumPy lstsq fit: max distance from the 7
    // annotated points to the curve is 0.0320167639 * R.
    constexpr double kOracleRelativeDeviation = 0.03201676391907693;
    const double radius = 10.0;
    std::vector<Point2> pts;
    for (int i = 0; i < 7; ++i) {
        const double a = std::numbers::pi * (1.0 - i / 6.0);
        pts.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    const CubicBezier fit = fitBoundary(PolylineBoundary(pts));
    const auto dense = fit.sample(20001);
    double worst = 0.0;
    for (const Point2& p : pts) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point2& q : dense) {
            best = std::min(best, distance(p, q));
        }
        worst = std::max(worst, best);
    }
    EXPECT_NEAR(worst / radius, kOracleRelativeDeviation, 1e-5);
    EXPECT_LT(worst / radius, 0.033);
}

TEST(FitBoundary, SimilarityEquivariance) {
    Rng rng(15);
    for (int i = 0; i < 100; ++i) {
        const auto pts = randomBoundary(rng, i % 2 ? 6 : 8);
        const double angle = rng.uniform(-3.14, 3.14);
        const double scale = rng.uniform(0.2, 5.0);
        const Point2 shift = rng.point(-100, 100);
        const auto map = [&](Point2 p) {
            return Point2{scale * (std::cos(angle) * p.x - std::sin(angle) * p.y) + shift.x,
                          scale * (std::sin(angle) * p.x + std::cos(angle) * p.y) + shift.y};
        };
        std::vector<Point2> mapped;
        for (const Point2& p : pts) {
            mapped.push_back(map(p));
        }
        const CubicBezier direct = fitBoundary(PolylineBoundary(mapped));
        const CubicBezier viaMap = fitBoundary(PolylineBoundary(pts));
        for (std::size_t k = 0; k < 4; ++k) {
            expectNear(direct[k], map(viaMap[k]), 1e-9);
        }
    }
}

TEST(FitBoundary, LineReproduction) {
    Rng rng(16);
    for (int i = 0; i < 50; ++i) {
        const Point2 a = rng.point(0, 500);
        const Point2 dir = rng.point(-1, 1);
        std::vector<double> s;
        for (int k = 0; k < 7; ++k) {
            s.push_back(rng.uniform(0, 300));
        }
        std::sort(s.begin(), s.end());
        std::vector<Point2> pts;
        for (double sk : s) {
            pts.push_back(a + sk * dir);
        }
        const CubicBezier fit = fitBoundary(PolylineBoundary(pts));
        const double len = std::hypot(dir.x, dir.y);
        for (const Point2& p : fit.sample(100)) {
            EXPECT_LT(std::abs(oracle::cross(a, a + dir, p)) / len, 1e-9);
        }
    }
}

TEST(FitBoundary, FreeEndpointsNeverWorseAndRecoverAllControls) {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        const PolylineBoundary b(randomBoundary(rng, 7));
        const ChordParams t = chordLengthParams(b);
        const CubicBezier fixed = fitBoundary(b);
        const CubicBezier free = fitBoundary(b, {EndpointMode::Free});
        EXPECT_LE(fittingResidual(b, free, t), fittingResidual(b, fixed, t) + 1e-12);
    }
    const CubicBezier truth({0, 0}, {10, 40}, {50, -20}, {80, 5});
    const std::vector<double> t{0.0, 0.2, 0.45, 0.7, 1.0};
    std::vector<Point2> pts;
    for (double tj : t) {
        pts.push_back(truth.evaluate(tj));
    }
    const CubicBezier free = fitCubic(PolylineBoundary(pts), ChordParams(t), {EndpointMode::Free});
    for (std::size_t k = 0; k < 4; ++k) {
        expectNear(free[k], truth[k], 1e-9);
    }
    EXPECT_THROW(fitBoundary(PolylineBoundary({{0, 0}, {1, 1}, {2, 0}}), {EndpointMode::Free}), ConditioningError);
}

TEST(FittingResidual, ZeroForGeneratingPoints) {
    const CubicBezier c({0, 0}, {20, 30}, {40, -10}, {60, 0});
    const std::vector<double> t{0.0, 0.3, 0.6, 1.0};
    std::vector<Point2> pts;
    for (double tj : t) {
        pts.push_back(c.evaluate(tj));
    }
    EXPECT_LT(fittingResidual(PolylineBoundary(pts), c, ChordParams(t)), 1e-9);
}

TEST(FittingResidual, RootMeanSquare) {
    const PolylineBoundary b({{0, 0}, {1, 1}, {2, 0}});
    const CubicBezier flat = CubicBezier::line({0, 0}, {2, 0});
    // Only the middle point deviates, by 1: sqrt(1 / 3).
    EXPECT_NEAR(fittingResidual(b, flat, ChordParams({0.0, 0.5, 1.0})), std::sqrt(1.0 / 3.0), 1e-15);
}

TEST(PolygonToRegion, AxisAlignedRectangle) {
    const std::vector<Point2> rect{{0, 0}, {10, 0}, {10, 4}, {0, 4}};
    const BezierTextRegion region = polygonToRegion(rect, "word");
    EXPECT_EQ(region.top.front(), (Point2{0, 0}));
    EXPECT_EQ(region.top.back(), (Point2{10, 0}));
    expectNear(region.top[1], {10.0 / 3, 0}, 1e-12);
    expectNear(region.top[2], {20.0 / 3, 0}, 1e-12);
    EXPECT_EQ(region.bottom.front(), (Point2{0, 4}));
    EXPECT_EQ(region.bottom.back(), (Point2{10, 4}));
    expectNear(region.bottom[1], {10.0 / 3, 4}, 1e-12);
    expectNear(region.bottom[2], {20.0 / 3, 4}, 1e-12);
    EXPECT_EQ(region.transcription, "word");
}

TEST(PolygonToRegion, TenAndFourteenPointPolygons) {
    Rng rng(18);
    for (std::size_t perSide : {5u, 7u}) {
        auto top = randomBoundary(rng, perSide);
        std::vector<Point2> bottom;
        for (const Point2& p : top) {
            bottom.push_back(p + Point2{rng.uniform(-2, 2), 30 + rng.uniform(-3, 3)});
        }
        std::vector<Point2> polygon = top;
        polygon.insert(polygon.end(), bottom.rbegin(), bottom.rend());
        const BezierTextRegion region = polygonToRegion(polygon);

        const PolylineBoundary topB(top), bottomB(bottom);
        EXPECT_EQ(region.top, fitBoundary(topB));
        EXPECT_EQ(region.bottom, fitBoundary(bottomB));
        EXPECT_EQ(region.bottom.front(), bottom.front());
        EXPECT_EQ(region.bottom.back(), bottom.back());
        // Minimal for the fixed endpoints.
        const ChordParams t = chordLengthParams(topB);
        const double best = fittingResidual(topB, region.top, t);
        for (int k = 0; k < 100; ++k) {
            const CubicBezier candidate(
                topB.front(), region.top[1] + rng.point(-5, 5), region.top[2] + rng.point(-5, 5), topB.back());
            EXPECT_LE(best, fittingResidual(topB, candidate, t) + 1e-12);
        }
    }
}

TEST(PolygonToRegion, Winding) {
    const std::vector<Point2> forward{{0, 0}, {10, 0}, {0, 4}, {10, 4}};
    const BezierTextRegion region = polygonToRegion(forward, std::nullopt, {PolygonWinding::BottomForward, {}});
    EXPECT_EQ(region.bottom.front(), (Point2{0, 4}));
    EXPECT_EQ(region.bottom.back(), (Point2{10, 4}));
}

TEST(PolygonToRegion, Errors) {
    EXPECT_THROW(polygonToRegion(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}}), InvalidArgument);
    EXPECT_THROW(polygonToRegion(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2}}), InvalidArgument);
    EXPECT_THROW(polygonToRegion(std::vector<Point2>{{0, 0}, {1, 0}}), InvalidArgument);
    // Top side collapses to a single point.
    EXPECT_THROW(polygonToRegion(std::vector<Point2>{{3, 3}, {3, 3}, {5, 6}, {0, 6}}), DegenerateGeometry);
}
