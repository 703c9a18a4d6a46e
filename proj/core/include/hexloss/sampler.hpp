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

#ifndef HEXLOSS_SAMPLER_HPP
#define HEXLOSS_SAMPLER_HPP

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "hexloss/variate_stream.hpp"

namespace hexloss {

enum class Shape { triangle60, rhombus120, hexagon };

std::string_view to_string(Shape shape) noexcept;

/// Parses "triangle60", "rhombus120" or "hexagon"; throws std::invalid_argument.
Shape parse_shape(std::string_view name);

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

/// A cell of side L in its canonical placement:
///  - triangle60: (0,0), (L,0), (L/2, sqrt3 L/2)
///  - rhombus120: (0,0), (L,0), (L/2, sqrt3 L/2), (-L/2, sqrt3 L/2)
///  - hexagon:    centred at the origin with vertices (+-L, 0), (+-L/2, +-sqrt3 L/2)
/// The base station sits at the origin in every case, so the triangle and
/// rhombus are one and two 60-degree sectors of the hexagon.
class CellGeometry {
 public:
  /// Throws std::invalid_argument unless side is finite and positive.
  CellGeometry(Shape shape, double side);

  Shape shape() const noexcept { return shape_; }
  double side() const noexcept { return side_; }

  double area() const noexcept;

  /// Closed x-extent of the shape.
  std::pair<double, double> x_range() const noexcept;

  /// Counter-clockwise vertex list.
  std::vector<Point2D> vertices() const;

 private:
  Shape shape_;
  double side_;
};

/// Inverse marginal CDF of the x-coordinate; u must lie in (0, 1).
double sample_x(const CellGeometry& geom, double u);

/// Conditional support of y given x = x0, as (lower, upper).
std::pair<double, double> y_support(const CellGeometry& geom, double x0);

/// Uniform draw on y_support(geom, x0) at level u in (0, 1).
double sample_y_given_x(const CellGeometry& geom, double x0, double u);

/// One point uniformly distributed over the cell.
Point2D sample_point(const CellGeometry& geom, VariateStream& stream);

/// Half-plane membership against the vertex list; boundary counts as inside
/// (with a 1e-12 L^2 rounding allowance on the edge cross products).
bool point_in_shape(const CellGeometry& geom, Point2D p);

/// Marginal density of x: vertical chord length divided by the area.
double marginal_pdf_x(const CellGeometry& geom, double x);

/// Marginal CDF of x, the forward map that sample_x inverts.
double marginal_cdf_x(const CellGeometry& geom, double x);

/// Partition of a cell into congruent equilateral triangles of equal area.
///
/// The cell is split into its 60-degree sectors around the origin (1, 2 or 6)
/// and each sector into m^2 triangles by an m-fold subdivision of its sides.
/// m is the smallest value giving at least `min_bins` bins in total.
class EqualAreaBinning {
 public:
  explicit EqualAreaBinning(const CellGeometry& geom, std::size_t min_bins = 96);

  std::size_t bin_count() const noexcept { return sectors_ * m_ * m_; }
  std::size_t subdivision() const noexcept { return m_; }

  /// Bin index of p. Points outside the cell are clamped to the nearest
  /// sector/sub-triangle so the caller's test sees them as misplaced mass.
  std::size_t bin_of(Point2D p) const;

 private:
  double side_;
  std::size_t sectors_;
  std::size_t m_;
  std::vector<std::size_t> row_offset_;
};

}  // namespace hexloss

#endif  // HEXLOSS_SAMPLER_HPP
