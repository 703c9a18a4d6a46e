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

#ifndef HEXLOSS_RADIAL_DENSITY_HPP
#define HEXLOSS_RADIAL_DENSITY_HPP

namespace hexloss::radial {

// Law of the base-station to mobile distance r for a uniform drop in a
// 60-degree sector of a hexagon of side L (and therefore in the whole hexagon,
// the rhombus and the triangle, which are unions of such sectors).
// Support [0, L] with a breakpoint at the inscribed radius sqrt3 L / 2.

/// sqrt3 L / 2.
double inscribed_radius(double side);

/// Distance from the centre to the far edge along angle theta in [0, pi/3].
double boundary_radius(double side, double theta);

/// Joint density 4 r / (sqrt3 L^2) of (r, theta) inside the sector.
/// Throws std::domain_error outside 0 <= theta <= pi/3, 0 <= r <= boundary.
double eval_polar_joint(double side, double r, double theta);

/// Marginal density f_R(r); 0 beyond r = L, std::domain_error for r < 0.
double eval_f_r(double side, double r);

/// Marginal CDF of r. Closed form below the inscribed radius, adaptive
/// quadrature (1e-12 absolute) above it.
double cdf_f_r(double side, double r);

}  // namespace hexloss::radial

#endif  // HEXLOSS_RADIAL_DENSITY_HPP
