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

#include "hexloss/radial_density.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hexloss/sampler.hpp"
#include "hexloss/stats.hpp"
#include "oracles.hpp"

namespace hexloss::radial {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

TEST(BoundaryRadius, CornersAndMidEdge) {
  EXPECT_NEAR(boundary_radius(2.0, 0.0), 2.0, 1e-15);
  EXPECT_NEAR(boundary_radius(2.0, kPi / 6.0), kSqrt3, 1e-15);
  EXPECT_NEAR(boundary_radius(2.0, kPi / 3.0), 2.0, 1e-15);
  EXPECT_THROW(boundary_radius(1.0, -0.01), std::domain_error);
  EXPECT_THROW(boundary_radius(1.0, kPi / 3.0 + 0.01), std::domain_error);
}

TEST(PolarJoint, Examples) {
  EXPECT_EQ(eval_polar_joint(1.0, 0.0, 0.3), 0.0);
  EXPECT_NEAR(eval_polar_joint(1.0, 0.5, kPi / 6.0), 2.0 / kSqrt3, 1e-15);
  EXPECT_THROW(eval_polar_joint(1.0, 0.95, kPi / 6.0), std::domain_error);
  EXPECT_THROW(eval_polar_joint(1.0, 0.5, -0.1), std::domain_error);
}

TEST(PolarJoint, IntegratesToOneOverSector) {
  const double L = 1.0;
  const double total = oracle::gauss_legendre(
      [&](double th) {
        const double rb = boundary_radius(L, th);
        return oracle::gauss_legendre(
            [&](double r) { return eval_polar_joint(L, r, th); }, 0.0, rb, 4);
      },
      0.0, kPi / 3.0, 64);
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(EvalFr, Examples) {
  EXPECT_EQ(eval_f_r(1.0, 0.0), 0.0);
  EXPECT_NEAR(eval_f_r(1.0, kSqrt3 / 2.0), 2.0 * kPi / 3.0, 1e-12);
  EXPECT_NEAR(eval_f_r(1.0, 1.0), 0.0, 1e-14);
  EXPECT_EQ(eval_f_r(1.0, 1.5), 0.0);
  EXPECT_THROW(eval_f_r(1.0, -0.1), std::domain_error);
}

TEST(EvalFr, BranchContinuity) {
  for (double L : {1.0, 250.0, 1000.0}) {
    const double r = kSqrt3 * L / 2.0;
    const double inner = 4.0 * kPi * r / (3.0 * kSqrt3 * L * L);
    const double outer = 8.0 * r / (kSqrt3 * L * L) * (std::asin(1.0) - kPi / 3.0);
    EXPECT_NEAR(inner / outer, 1.0, 1e-12);
    EXPECT_NEAR(eval_f_r(L, r) * L, 2.0 * kPi / 3.0, 1e-12);
  }
}

TEST(EvalFr, Normalization) {
  // Split at the kink, and use r = r_in + s^2 on the outer piece where the
  // density has a square-root edge.
  const double L = 1.0;
  const double rin = kSqrt3 / 2.0;
  const double inner =
      oracle::gauss_legendre([&](double r) { return eval_f_r(L, r); }, 0.0, rin, 4);
  const double outer = oracle::gauss_legendre(
      [&](double s) { return 2.0 * s * eval_f_r(L, rin + s * s); }, 0.0,
      std::sqrt(L - rin), 200);
  EXPECT_NEAR(inner + outer, 1.0, 1e-9);
}

TEST(EvalFr, ScaleCovariance) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> dl(10.0, 5000.0), du(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double L = dl(rng);
    const double r = du(rng) * L;
    const double a = eval_f_r(L, r);
    const double b = eval_f_r(1.0, r / L) / L;
    if (b == 0.0) continue;
    EXPECT_NEAR(a / b, 1.0, 1e-12);
  }
}

TEST(CdfFr, Examples) {
  EXPECT_EQ(cdf_f_r(1.0, 0.0), 0.0);
  EXPECT_NEAR(cdf_f_r(1.0, kSqrt3 / 2.0), 0.906899682117108925, 1e-12);
  EXPECT_NEAR(cdf_f_r(1.0, 0.3), 0.108827961854053071, 1e-15);
  EXPECT_NEAR(cdf_f_r(1.0, 1.0), 1.0, 1e-9);
  EXPECT_EQ(cdf_f_r(1.0, 2.0), 1.0);
}

TEST(CdfFr, MonotoneAndMatchesDensityIntegral) {
  const double L = 300.0;
  double prev = 0.0;
  for (int i = 1; i <= 400; ++i) {
    const double r = L * i / 400.0;
    const double c = cdf_f_r(L, r);
    EXPECT_GE(c, prev);
    prev = c;
  }
  const double r = 0.95 * L;
  const double rin = kSqrt3 * L / 2.0;
  const double ref =
      oracle::gauss_legendre([&](double x) { return eval_f_r(L, x); }, 0.0, rin, 4) +
      oracle::gauss_legendre([&](double s) { return 2.0 * s * eval_f_r(L, rin + s * s); },
                             0.0, std::sqrt(r - rin), 200);
  EXPECT_NEAR(cdf_f_r(L, r), ref, 1e-10);
}

TEST(CdfFr, KsAgainstSampledRadiiAllShapes) {
  // The radial law of the 60 degree sector is shared by all three shapes.
  for (Shape s : {Shape::triangle60, Shape::rhombus120, Shape::hexagon}) {
    const CellGeometry g(s, 1.0);
    VariateStream stream(101);
    std::vector<double> radii(100000);
    for (auto& r : radii) {
      const Point2D p = sample_point(g, stream);
      r = std::hypot(p.x, p.y);
    }
    std::sort(radii.begin(), radii.end());
    const auto ks = stats::ks_test(radii, [](double r) { return cdf_f_r(1.0, r); });
    EXPECT_TRUE(ks.pass) << to_string(s) << " D=" << ks.statistic;
  }
}

}  // namespace
}  // namespace hexloss::radial
