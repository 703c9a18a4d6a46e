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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hexloss {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kSector = std::numbers::pi / 3.0;

void require_open_unit(double u, const char* who) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error(std::string(who) + ": u must lie in (0, 1)");
  }
}

std::size_t sector_count(Shape shape) {
  switch (shape) {
    case Shape::triangle60: return 1;
    case Shape::rhombus120: return 2;
    case Shape::hexagon: return 6;
  }
  return 6;
}

}  // namespace

std::string_view to_string(Shape shape) noexcept {
  switch (shape) {
    case Shape::triangle60: return "triangle60";
    case Shape::rhombus120: return "rhombus120";
    case Shape::hexagon: return "hexagon";
  }
  return "hexagon";
}

Shape parse_shape(std::string_view name) {
  if (name == "triangle60") return Shape::triangle60;
  if (name == "rhombus120") return Shape::rhombus120;
  if (name == "hexagon") return Shape::hexagon;
  throw std::invalid_argument("unknown shape '" + std::string(name) +
                              "' (expected triangle60, rhombus120 or hexagon)");
}

CellGeometry::CellGeometry(Shape shape, double side) : shape_(shape), side_(side) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("CellGeometry: side must be finite and > 0");
  }
}

double CellGeometry::area() const noexcept {
  const double unit = kSqrt3 * side_ * side_ / 4.0;
  switch (shape_) {
    case Shape::triangle60: return unit;
    case Shape::rhombus120: return 2.0 * unit;
    case Shape::hexagon: return 6.0 * unit;
  }
  return 6.0 * unit;
}

std::pair<double, double> CellGeometry::x_range() const noexcept {
  switch (shape_) {
    case Shape::triangle60: return {0.0, side_};
    case Shape::rhombus120: return {-0.5 * side_, side_};
    case Shape::hexagon: return {-side_, side_};
  }
  return {-side_, side_};
}

std::vector<Point2D> CellGeometry::vertices() const {
  const double L = side_;
  const double h = kSqrt3 * L / 2.0;
  switch (shape_) {
    case Shape::triangle60:
      return {{0.0, 0.0}, {L, 0.0}, {L / 2.0, h}};
    case Shape::rhombus120:
      return {{0.0, 0.0}, {L, 0.0}, {L / 2.0, h}, {-L / 2.0, h}};
    case Shape::hexagon:
      return {{L, 0.0},   {L / 2.0, h},   {-L / 2.0, h},
              {-L, 0.0},  {-L / 2.0, -h}, {L / 2.0, -h}};
  }
  return {};
}

double sample_x(const CellGeometry& geom, double u) {
  require_open_unit(u, "sample_x");
  const double L = geom.side();
  switch (geom.shape()) {
    case Shape::triangle60:
      if (u <= 0.5) return L * std::sqrt(u / 2.0);
      return L * (1.0 - std::sqrt((1.0 - u) / 2.0));
    case Shape::rhombus120:
      if (u <= 0.25) return 0.5 * L * (2.0 * std::sqrt(u) - 1.0);
      if (u <= 0.75) return L * (u - 0.25);
      return L * (1.0 - std::sqrt(1.0 - u));
    case Shape::hexagon:
      if (u <= 1.0 / 6.0) return L * (std::sqrt(1.5 * u) - 1.0);
      if (u <= 5.0 / 6.0) return 0.75 * L * (2.0 * u - 1.0);
      return L * (1.0 - std::sqrt(1.5 * (1.0 - u)));
  }
  return 0.0;
}

std::pair<double, double> y_support(const CellGeometry& geom, double x0) {
  const auto [lo, hi] = geom.x_range();
  if (!(x0 >= lo && x0 <= hi)) {
    throw std::domain_error("y_support: x0 outside the cell's x-range");
  }
  const double L = geom.side();
  const double top = kSqrt3 * L / 2.0;
  switch (geom.shape()) {
    case Shape::triangle60:
      if (x0 <= L / 2.0) return {0.0, kSqrt3 * x0};
      return {0.0, kSqrt3 * (L - x0)};
    case Shape::rhombus120:
      if (x0 <= 0.0) return {-kSqrt3 * x0, top};
      if (x0 <= L / 2.0) return {0.0, top};
      return {0.0, kSqrt3 * (L - x0)};
    case Shape::hexagon: {
      const double ax = std::abs(x0);
      if (ax <= L / 2.0) return {-top, top};
      const double half = kSqrt3 * (L - ax);
      return {-half, half};
    }
  }
  return {0.0, 0.0};
}

double sample_y_given_x(const CellGeometry& geom, double x0, double u) {
  require_open_unit(u, "sample_y_given_x");
  const auto [lo, hi] = y_support(geom, x0);
  return lo + (hi - lo) * u;
}

Point2D sample_point(const CellGeometry& geom, VariateStream& stream) {
  const double x = sample_x(geom, stream.uniform());
  return {x, sample_y_given_x(geom, x, stream.uniform())};
}

bool point_in_shape(const CellGeometry& geom, Point2D p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  const auto v = geom.vertices();
  const double slack = 1e-12 * geom.side() * geom.side();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2D a = v[i];
    const Point2D b = v[(i + 1) % v.size()];
    const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross < -slack) return false;
  }
  return true;
}

double marginal_pdf_x(const CellGeometry& geom, double x) {
  const auto [lo, hi] = geom.x_range();
  if (x < lo || x > hi) return 0.0;
  const auto [ylo, yhi] = y_support(geom, x);
  return (yhi - ylo) / geom.area();
}

double marginal_cdf_x(const CellGeometry& geom, double x) {
  const auto [lo, hi] = geom.x_range();
  if (x <= lo) return 0.0;
  if (x >= hi) return 1.0;
  const double L = geom.side();
  const double L2 = L * L;
  switch (geom.shape()) {
    case Shape::triangle60:
      if (x <= L / 2.0) return 2.0 * x * x / L2;
      return 1.0 - 2.0 * (L - x) * (L - x) / L2;
    case Shape::rhombus120:
      if (x <= 0.0) return (x + L / 2.0) * (x + L / 2.0) / L2;
      if (x <= L / 2.0) return 0.25 + x / L;
      return 1.0 - (L - x) * (L - x) / L2;
    case Shape::hexagon:
      if (x <= -L / 2.0) return 2.0 * (L + x) * (L + x) / (3.0 * L2);
      if (x <= L / 2.0) return 0.5 + 2.0 * x / (3.0 * L);
      return 1.0 - 2.0 * (L - x) * (L - x) / (3.0 * L2);
  }
  return 0.0;
}

EqualAreaBinning::EqualAreaBinning(const CellGeometry& geom, std::size_t min_bins)
    : side_(geom.side()), sectors_(sector_count(geom.shape())), m_(1) {
  while (sectors_ * m_ * m_ < min_bins) ++m_;
  row_offset_.resize(m_ + 1, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    row_offset_[i + 1] = row_offset_[i] + 2 * (m_ - i) - 1;
  }
}

std::size_t EqualAreaBinning::bin_of(Point2D p) const {
  double theta = std::atan2(p.y, p.x);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  auto k = static_cast<std::size_t>(std::floor(theta / kSector));
  if (k >= 6) k = 5;
  if (k >= sectors_) {
    // Outside the covered sectors: snap to the angularly nearest one.
    const double to_last = theta - static_cast<double>(sectors_) * kSector;
    const double to_first = 2.0 * std::numbers::pi - theta;
    k = (to_last < to_first) ? sectors_ - 1 : 0;
  }
  const double a0 = static_cast<double>(k) * kSector;
  const double a1 = a0 + kSector;
  const double ax = side_ * std::cos(a0), ay = side_ * std::sin(a0);
  const double bx = side_ * std::cos(a1), by = side_ * std::sin(a1);
  const double det = ax * by - ay * bx;
  const double md = static_cast<double>(m_);
  const double s = std::max(0.0, (p.x * by - p.y * bx) / det) * md;
  const double t = std::max(0.0, (ax * p.y - ay * p.x) / det) * md;
  auto i = std::min(static_cast<std::size_t>(s), m_ - 1);
  auto j = std::min(static_cast<std::size_t>(t), m_ - 1);
  if (i + j > m_ - 1) j = m_ - 1 - i;
  const double fs = s - static_cast<double>(i);
  const double ft = t - static_cast<double>(j);
  const bool down = (fs + ft >= 1.0) && (i + j + 2 <= m_);
  const std::size_t local = row_offset_[i] + 2 * j + (down ? 1 : 0);
  return k * m_ * m_ + local;
}

}  // namespace hexloss
