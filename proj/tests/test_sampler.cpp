// Copyright 2026 The hexloss Authors
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

#include "hexloss/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "hexloss/stats.hpp"
#include "oracles.hpp"

namespace hexloss {
namespace {

const double kSqrt3 = std::sqrt(3.0);
constexpr Shape kShapes[] = {Shape::triangle60, Shape::rhombus120, Shape::hexagon};

TEST(SampleX, HexagonMedianIsCentre) {
  EXPECT_NEAR(sample_x(CellGeometry(Shape::hexagon, 1.0), 0.5), 0.0, 1e-15);
}

TEST(SampleX, HexagonFirstJunction) {
  const CellGeometry g(Shape::hexagon, 1.0);
  EXPECT_NEAR(sample_x(g, 1.0 / 6.0), -0.5, 1e-12);
  // Both adjacent pieces evaluated at the junction.
  EXPECT_NEAR(std::sqrt(3.0 * (1.0 / 6.0) / 2.0) - 1.0, -0.5, 1e-15);
  EXPECT_NEAR(0.75 * (2.0 / 6.0 - 1.0), -0.5, 1e-15);
}

TEST(SampleX, TriangleEighth) {
  EXPECT_NEAR(sample_x(CellGeometry(Shape::triangle60, 1.0), 0.125), 0.25, 1e-15);
}

TEST(SampleX, RhombusJunctions) {
  const CellGeometry g(Shape::rhombus120, 1.0);
  EXPECT_NEAR(sample_x(g, 0.25), 0.0, 1e-15);
  EXPECT_NEAR(sample_x(g, 0.75), 0.5, 1e-15);
}

TEST(SampleX, ContinuityAtPieceBoundaries) {
  struct Case {
    Shape shape;
    double u;
  };
  for (const Case c : {Case{Shape::triangle60, 0.5}, Case{Shape::rhombus120, 0.25},
                       Case{Shape::rhombus120, 0.75}, Case{Shape::hexagon, 1.0 / 6.0},
                       Case{Shape::hexagon, 5.0 / 6.0}}) {
    for (double L : {1.0, 250.0, 3500.0}) {
      const CellGeometry g(c.shape, L);
      const double below = sample_x(g, std::nextafter(c.u, 0.0));
      const double above = sample_x(g, std::nextafter(c.u, 1.0));
      EXPECT_NEAR(below, above, 1e-12 * L) << to_string(c.shape) << " u=" << c.u;
    }
  }
}

TEST(SampleX, StrictlyIncreasing) {
  for (Shape s : kShapes) {
    const CellGeometry g(s, 1.0);
    double prev = -INFINITY;
    for (int i = 1; i < 10000; ++i) {
      const double x = sample_x(g, i / 10000.0);
      ASSERT_GT(x, prev) << to_string(s) << " i=" << i;
      prev = x;
    }
  }
}

TEST(SampleX, RoundTripThroughChordIntegral) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (Shape s : kShapes) {
    const CellGeometry g(s, 1.0);
    for (int i = 0; i < 1000; ++i) {
      double u = d(rng);
      if (u == 0.0) continue;
      EXPECT_NEAR(oracle::marginal_cdf_x(g, sample_x(g, u)), u, 1e-10);
    }
  }
}

TEST(SampleX, LibraryMarginalCdfMatchesOracle) {
  for (Shape s : kShapes) {
    const CellGeometry g(s, 2.0);
    const auto [lo, hi] = g.x_range();
    for (int i = 0; i <= 200; ++i) {
      const double x = lo + (hi - lo) * i / 200.0;
      EXPECT_NEAR(marginal_cdf_x(g, x), oracle::marginal_cdf_x(g, x), 1e-12);
    }
  }
}

TEST(SampleX, MarginalPdfMatchesChord) {
  for (Shape s : kShapes) {
    const CellGeometry g(s, 1.5);
    const auto v = g.vertices();
    const double area = oracle::shoelace_area(v);
    const auto [lo, hi] = g.x_range();
    for (int i = 1; i < 100; ++i) {
      const double x = lo + (hi - lo) * i / 100.0;
      EXPECT_NEAR(marginal_pdf_x(g, x), oracle::polygon_chord(v, x) / area, 1e-12);
    }
  }
}

TEST(SampleX, RejectsClosedEndpoints) {
  const CellGeometry g(Shape::hexagon, 1.0);
  EXPECT_THROW(sample_x(g, 0.0), std::domain_error);
  EXPECT_THROW(sample_x(g, 1.0), std::domain_error);
  EXPECT_THROW(sample_x(g, -0.1), std::domain_error);
  EXPECT_THROW(sample_x(g, std::nan("")), std::domain_error);
}

TEST(CellGeometry, AreasMatchVertexPolygons) {
  for (Shape s : kShapes) {
    const CellGeometry g(s, 3.0);
    EXPECT_NEAR(g.area(), oracle::shoelace_area(g.vertices()), 1e-12);
  }
  EXPECT_NEAR(CellGeometry(Shape::hexagon, 1.0).area(), 1.5 * kSqrt3, 1e-15);
  EXPECT_NEAR(CellGeometry(Shape::triangle60, 1.0).area(), kSqrt3 / 4.0, 1e-15);
  EXPECT_NEAR(CellGeometry(Shape::rhombus120, 1.0).area(), kSqrt3 / 2.0, 1e-15);
}

TEST(CellGeometry, CanonicalVertices) {
  const auto t = CellGeometry(Shape::triangle60, 1.0).vertices();
  ASSERT_EQ(t.size(), 3u);
  EXPECT_DOUBLE_EQ(t[2].x, 0.5);
  EXPECT_DOUBLE_EQ(t[2].y, kSqrt3 / 2.0);
  EXPECT_EQ(CellGeometry(Shape::rhombus120, 1.0).vertices().size(), 4u);
  EXPECT_EQ(CellGeometry(Shape::hexagon, 1.0).vertices().size(), 6u);
}

TEST(CellGeometry, RejectsBadSide) {
  EXPECT_THROW(CellGeometry(Shape::hexagon, 0.0), std::invalid_argument);
  EXPECT_THROW(CellGeometry(Shape::hexagon, -1.0), std::invalid_argument);
  EXPECT_THROW(CellGeometry(Shape::hexagon, INFINITY), std::invalid_argument);
}

TEST(ParseShape, RoundTripAndRejection) {
  for (Shape s : kShapes) EXPECT_EQ(parse_shape(to_string(s)), s);
  EXPECT_THROW(parse_shape("square"), std::invalid_argument);
}

TEST(SampleYGivenX, TriangleMidpoint) {
  EXPECT_NEAR(sample_y_given_x(CellGeometry(Shape::triangle60, 1.0), 0.5, 0.5),
              kSqrt3 / 4.0, 1e-15);
}

TEST(SampleYGivenX, HexagonCentreChordEnds) {
  const CellGeometry g(Shape::hexagon, 1.0);
  EXPECT_NEAR(sample_y_given_x(g, 0.0, 1e-15), -kSqrt3 / 2.0, 1e-14);
  EXPECT_NEAR(sample_y_given_x(g, 0.0, 1.0 - 1e-15), kSqrt3 / 2.0, 1e-14);
}

TEST(YSupport, HexagonSlantedEdge) {
  const auto [lo, hi] = y_support(CellGeometry(Shape::hexagon, 1.0), 0.9);
  EXPECT_NEAR(hi, kSqrt3 * 0.1, 1e-14);
  EXPECT_NEAR(lo, -kSqrt3 * 0.1, 1e-14);
}

TEST(YSupport, RhombusLeftLobe) {
  const auto [lo, hi] = y_support(CellGeometry(Shape::rhombus120, 1.0), -0.25);
  EXPECT_NEAR(lo, kSqrt3 * 0.25, 1e-15);
  EXPECT_NEAR(hi, kSqrt3 / 2.0, 1e-15);
}

TEST(YSupport, MatchesPolygonChord) {
  for (Shape s : kShapes) {
    const CellGeometry g(s, 1.0);
    const auto v = g.vertices();
    const auto [xl, xh] = g.x_range();
    for (int i = 1; i < 50; ++i) {
      const double x = xl + (xh - xl) * i / 50.0;
      const auto [lo, hi] = y_support(g, x);
      EXPECT_NEAR(hi - lo, oracle::polygon_chord(v, x), 1e-13);
    }
  }
}

TEST(YSupport, RejectsOutsideRange) {
  EXPECT_THROW(y_support(CellGeometry(Shape::triangle60, 1.0), -0.01), std::domain_error);
  EXPECT_THROW(y_support(CellGeometry(Shape::hexagon, 1.0), 1.01), std::domain_error);
  EXPECT_THROW(sample_y_given_x(CellGeometry(Shape::rhombus120, 1.0), -0.6, 0.5),
               std::domain_error);
}

TEST(PointInShape, Examples) {
  const CellGeometry hex(Shape::hexagon, 1.0);
  EXPECT_TRUE(point_in_shape(hex, {0.0, 0.0}));
  EXPECT_FALSE(point_in_shape(hex, {1.001, 0.0}));
  EXPECT_TRUE(point_in_shape(CellGeometry(Shape::triangle60, 1.0), {0.5, kSqrt3 / 2.0}));
  EXPECT_FALSE(point_in_shape(CellGeometry(Shape::triangle60, 1.0), {0.5, -0.01}));
}

TEST(SamplePoint, ContainmentAllShapes) {
  for (Shape s : kShapes) {
    const CellGeometry g(s, 1000.0);
    VariateStream stream(17);
    for (int i = 0; i < 20000; ++i) {
      const Point2D p = sample_point(g, stream);
      ASSERT_TRUE(point_in_shape(g, p)) << to_string(s) << " " << p.x << "," << p.y;
    }
  }
}

TEST(SamplePoint, InscribedCircleFraction) {
  const CellGeometry g(Shape::hexagon, 1.0);
  VariateStream stream(3);
  const int n = 100000;
  int inside = 0;
  for (int i = 0; i < n; ++i) {
    const Point2D p = sample_point(g, stream);
    if (p.x * p.x + p.y * p.y <= 0.75) ++inside;
  }
  EXPECT_NEAR(static_cast<double>(inside) / n, std::numbers::pi / (2.0 * kSqrt3), 0.003);
}

TEST(SamplePoint, HexagonMeanIsCentred) {
  const CellGeometry g(Shape::hexagon, 1.0);
  VariateStream stream(4);
  const int n = 100000;
  double sx = 0.0, sxx = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_point(g, stream).x;
    sx += x;
    sxx += x * x;
  }
  const double mean = sx / n;
  const double sd = std::sqrt(sxx / n - mean * mean);
  EXPECT_LT(std::abs(mean), 3.0 * sd / std::sqrt(static_cast<double>(n)));
}

TEST(SamplePoint, SpatialChiSquareAllShapes) {
  for (Shape s : kShapes) {
    const CellGeometry g(s, 1.0);
    VariateStream stream(99);
    std::vector<Point2D> pts(100000);
    for (auto& p : pts) p = sample_point(g, stream);
    const auto r = stats::spatial_chi_square(g, pts, 0.001, 96);
    EXPECT_GE(r.bins, 96u);
    EXPECT_TRUE(r.pass) << to_string(s) << " p=" << r.p_value;
  }
}

TEST(EqualAreaBinning, BinCounts) {
  EXPECT_EQ(EqualAreaBinning(CellGeometry(Shape::hexagon, 1.0)).bin_count(), 96u);
  EXPECT_EQ(EqualAreaBinning(CellGeometry(Shape::rhombus120, 1.0)).bin_count(), 98u);
  EXPECT_EQ(EqualAreaBinning(CellGeometry(Shape::triangle60, 1.0)).bin_count(), 100u);
}

TEST(EqualAreaBinning, BinsHaveEqualArea) {
  // Monte Carlo on a fine lattice: every bin receives the same share of
  // lattice points inside the cell, up to edge effects.
  for (Shape s : kShapes) {
    const CellGeometry g(s, 1.0);
    const EqualAreaBinning bins(g);
    std::vector<double> count(bins.bin_count(), 0.0);
    const auto [xl, xh] = g.x_range();
    const int m = 1200;
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const Point2D p{xl + (xh - xl) * (i + 0.5) / m, -1.0 + 2.0 * (j + 0.5) / m};
        if (!point_in_shape(g, p)) continue;
        count[bins.bin_of(p)] += 1.0;
        total += 1.0;
      }
    }
    const double expect = total / static_cast<double>(bins.bin_count());
    for (double c : count) EXPECT_NEAR(c / expect, 1.0, 0.03) << to_string(s);
  }
}

TEST(EqualAreaBinning, IndicesAreInRangeAndAllUsed) {
  const CellGeometry g(Shape::hexagon, 1.0);
  const EqualAreaBinning bins(g);
  VariateStream stream(8);
  std::set<std::size_t> seen;
  for (int i = 0; i < 20000; ++i) {
    const auto b = bins.bin_of(sample_point(g, stream));
    ASSERT_LT(b, bins.bin_count());
    seen.insert(b);
  }
  EXPECT_EQ(seen.size(), bins.bin_count());
}

}  // namespace
}  // namespace hexloss
